#pragma once

#include <string>
#include <vector>

#include "algebroid/manifold.hpp"

// Frozen structures shared by the suite, the tests and the benchmarks.
namespace algebroid::fixtures {

Chart chart(int n);  // coordinates x, y, z truncated to n
Chart point();

LieAlgebroid tangent(int n);
// Anchor (d_x, x d_y, d_y) over (x, y) with [e1, e2] = e3.
LieAlgebroid rank3();
LieAlgebroid so3();

LeftSymmetricAlgebroid flat_lsa(int n);
// Gamma^x_xx = x on R.
LeftSymmetricAlgebroid tm_nabla_1d();
// Gamma^y_xx = 6x on R^2.
LeftSymmetricAlgebroid tm_nabla_2d();
// Rank 2 over a point with e1 . e1 = e1.
LeftSymmetricAlgebroid point_algebra();
// Rank 2 over a point with e1 . e2 = e1 only; not left-symmetric.
LeftSymmetricAlgebroid point_table_bad();

AffinePatch patch_1d();
AffinePatch patch_2d_curved();

struct Named {
  std::string name;
  LeftSymmetricAlgebroid lsa;
};
// Validated LSAs used by the randomized identity families.
std::vector<Named> lsa_family();

struct NamedLie {
  std::string name;
  LieAlgebroid lie;
};
std::vector<NamedLie> lie_family();

struct NamedPatch {
  std::string name;
  AffinePatch patch;
  // Polynomial affine coordinates when the patch has them (Hess a = 0);
  // empty otherwise.
  std::vector<Scalar> affine;
};
std::vector<NamedPatch> patch_family();

// Lambda = (d_x + y d_z) ^ d_y, E = d_z on R^3.
JacobiPair contact();

JKVPair jkv_1d();           // h = -x, E = d_x
JKVPair jkv_violate_ii();   // h = x^2, E = d_x
JKVPair jkv_violate_iii();  // h = -x^2, E = x d_x
JKVPair jkv_violate_i();    // h = diag(1, x), E = 0 on R^2

Matrix diag_1_x();  // on R^2
Matrix diag_x_y();  // KV on flat R^2

}  // namespace algebroid::fixtures
