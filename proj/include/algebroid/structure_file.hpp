#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "algebroid/manifold.hpp"

namespace algebroid {

enum class StructureKind { Lie, Lsa, Jacobi, Jlsa, Manifold, JkvManifold };

std::string kind_name(StructureKind k);

// Plain-text description of one structure. The file is a list of
// "key = value" lines; '#' starts a comment. Lists are written
// "[a, b; c, d]" with ',' between entries and ';' between rows and may
// continue over several lines until the brackets close.
//
//   kind        lie | lsa | jacobi | jlsa | manifold | jkv-manifold
//   base        coordinate names separated by spaces; a trailing "t" adds the line
//   rank        frame count (algebroid kinds)
//   anchor      rank rows of chart-dimension entries: rho(e_i)
//   table       rank*rank rows of rank entries, row i*rank+j = [e_i, e_j] or e_i.e_j
//   christoffel dim*dim rows, row i*dim+j = nabla_{d_i} d_j (manifold kinds)
//   phi0, E, theta   one row
//   pi          skew rank x rank matrix
//   h, g        symmetric square matrices
struct StructureFile {
  StructureKind kind = StructureKind::Lie;
  Chart chart;
  int rank = 0;
  std::vector<std::vector<Scalar>> anchor;
  std::vector<Section> table;  // bracket, product, or Christoffel symbols
  std::optional<Cosection> phi0;
  std::optional<Multisection> pi;
  std::optional<Matrix> h;
  std::optional<Section> e;
  std::optional<Matrix> g;
  std::optional<Cosection> theta;

  bool is_manifold() const { return kind == StructureKind::Manifold || kind == StructureKind::JkvManifold; }
  bool is_lsa() const { return kind == StructureKind::Lsa || kind == StructureKind::Jlsa; }
  bool has_phi0() const { return kind == StructureKind::Jacobi || kind == StructureKind::Jlsa; }

  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

// Throws ParseError with the line and column of the offending text.
StructureFile parse_structure(std::string_view text);
StructureFile parse_structure_file(const std::string& path);
std::string emit(const StructureFile& f);

// Unvalidated views of the payload; each throws std::invalid_argument when
// the kind does not carry the requested structure.
AnchoredBundle bundle_of(const StructureFile& f);
LieAlgebroid lie_of(const StructureFile& f);
LeftSymmetricAlgebroid lsa_of(const StructureFile& f);
JacobiAlgebroid jacobi_of(const StructureFile& f);
JacobiLSA jlsa_of(const StructureFile& f);
AffinePatch patch_of(const StructureFile& f);

}  // namespace algebroid
