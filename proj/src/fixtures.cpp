#include "algebroid/fixtures.hpp"

namespace algebroid::fixtures {

namespace {

Scalar coord(int a) { return Scalar::variable(a); }

std::vector<Section> zero_table(int r) { return std::vector<Section>(static_cast<std::size_t>(r * r), Section(r)); }

}  // namespace

Chart chart(int n) {
  static const char* names[] = {"x", "y", "z"};
  return Chart(std::vector<std::string>(names, names + n));
}

Chart point() { return Chart(std::vector<std::string>{}); }

LieAlgebroid tangent(int n) { return LieAlgebroid::tangent(chart(n)); }

LieAlgebroid rank3() {
  std::vector<std::vector<Scalar>> anchor{{1, 0}, {0, coord(0)}, {0, 1}};
  std::vector<Section> table = zero_table(3);
  table[0 * 3 + 1][2] = 1;
  table[1 * 3 + 0][2] = -1;
  return LieAlgebroid::validated(AnchoredBundle(chart(2), std::move(anchor)), std::move(table));
}

LieAlgebroid so3() {
  std::vector<Section> table = zero_table(3);
  auto set = [&](int i, int j, int k) {
    table[i * 3 + j][k] = 1;
    table[j * 3 + i][k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  std::vector<std::vector<Scalar>> anchor(3);
  return LieAlgebroid::validated(AnchoredBundle(point(), std::move(anchor)), std::move(table));
}

LeftSymmetricAlgebroid flat_lsa(int n) { return lsa_from_connection(Connection(tangent(n), zero_table(n))); }

LeftSymmetricAlgebroid tm_nabla_1d() { return patch_1d().lsa(); }

LeftSymmetricAlgebroid tm_nabla_2d() { return patch_2d_curved().lsa(); }

LeftSymmetricAlgebroid point_algebra() {
  std::vector<Section> table = zero_table(2);
  table[0][0] = 1;
  return LeftSymmetricAlgebroid::validated(AnchoredBundle(point(), std::vector<std::vector<Scalar>>(2)),
                                           std::move(table));
}

LeftSymmetricAlgebroid point_table_bad() {
  std::vector<Section> table = zero_table(2);
  table[0 * 2 + 1][0] = 1;
  return LeftSymmetricAlgebroid::candidate(AnchoredBundle(point(), std::vector<std::vector<Scalar>>(2)),
                                           std::move(table));
}

AffinePatch patch_1d() {
  std::vector<Section> g = zero_table(1);
  g[0][0] = coord(0);
  return AffinePatch(chart(1), std::move(g));
}

AffinePatch patch_2d_curved() {
  std::vector<Section> g = zero_table(2);
  g[0][1] = Scalar(6) * coord(0);
  return AffinePatch(chart(2), std::move(g));
}

std::vector<Named> lsa_family() {
  return {
      {"flat R^2", flat_lsa(2)},
      {"TM_nabla R^2", tm_nabla_2d()},
      {"TM_nabla R", tm_nabla_1d()},
      {"point algebra", point_algebra()},
      {"bar nabla R", lsa_bar_nabla(Connection(tangent(1), zero_table(1)))},
  };
}

std::vector<NamedLie> lie_family() {
  return {{"TM R^2", tangent(2)}, {"rank 3", rank3()}, {"so(3)", so3()}};
}

std::vector<NamedPatch> patch_family() {
  const Scalar x = coord(0), y = coord(1);
  return {{"flat R^2", AffinePatch::flat(chart(2)), {x, y}},
          {"curved R^2", patch_2d_curved(), {x, y + x * x * x}},
          {"curved R", patch_1d(), {}}};
}

JacobiPair contact() {
  const Scalar y = coord(1);
  Multisection lambda(3, 2);
  lambda.add(bit(0) | bit(1), 1);
  lambda.add(bit(1) | bit(2), -y);
  Section e(3);
  e[2] = 1;
  return {lambda, e};
}

namespace {

JKVPair one_dim(Scalar h, Scalar e) {
  return {Matrix(std::vector<std::vector<Scalar>>{{std::move(h)}}), Section(std::vector<Scalar>{std::move(e)})};
}

}  // namespace

JKVPair jkv_1d() { return one_dim(-coord(0), 1); }
JKVPair jkv_violate_ii() { return one_dim(coord(0) * coord(0), 1); }
JKVPair jkv_violate_iii() { return one_dim(-(coord(0) * coord(0)), coord(0)); }
JKVPair jkv_violate_i() { return {diag_1_x(), Section(2)}; }

Matrix diag_1_x() { return Matrix::diagonal({1, coord(0)}); }
Matrix diag_x_y() { return Matrix::diagonal({coord(0), coord(1)}); }

}  // namespace algebroid::fixtures
