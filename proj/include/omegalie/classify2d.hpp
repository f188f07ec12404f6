#pragma once

// Isomorphism classes of 2-dimensional ternary w-Lie algebras.
//
// A tensor is read through its independent constants (p, q, r, s). The
// decision rule: all zero -> I; p != s -> IV; otherwise with a = p = s,
// b = q, c = r: a^2 == b c -> III, else II.
//
// Under a basis change with matrix A (determinant d) the W-part
// M = [[c, a], [a, b]], a = (p + s) / 2, transforms as M -> A M A^T / d^2 and
// the V-coordinate (p - s) / 2 as lambda -> lambda / d. Vectors with p != s
// and a nonzero W-part carry further invariants (rank M, det M / lambda^2),
// so label IV is a union of orbits there; iso_witness tells those apart.

#include "omegalie/eis_matrix.hpp"
#include "omegalie/structure_tensor.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegalie {

enum class ClassLabel { I, II, III, IV };

const char* to_string(ClassLabel label);
// Throws std::invalid_argument for anything but "I", "II", "III", "IV".
ClassLabel parse_class_label(const std::string& text);

struct ClassInvariants {
  bool is_zero = false;
  bool in_W = false;       // p == s
  bool disc_zero = false;  // p^2 - q r == 0
  bool in_V = false;       // multiple of (1, 0, 0, -1)
};

struct ClassReport {
  ClassLabel label = ClassLabel::I;
  ClassInvariants invariants;
  std::optional<EisMatrix> witness;  // maps the input to canonical(label), when found over Q(w)
};

Independent2d canonical_constants(ClassLabel label);
StructureTensor canonical(ClassLabel label);

struct NotOmegaSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ClassInvariants invariants_of(const Independent2d& v);
ClassLabel label_of(const ClassInvariants& inv);

// Throws std::invalid_argument unless dim == 2 and NotOmegaSymmetric when
// the tensor fails check_omega_symmetry.
ClassReport classify(const StructureTensor& c, bool with_witness = true);

struct IsoResult {
  std::optional<EisMatrix> witness;  // transform_2d_closed_form(src, witness) == dst
  std::string reason;
};

inline constexpr const char* reason_isomorphic = "isomorphic";
inline constexpr const char* reason_not_isomorphic = "not isomorphic";
inline constexpr const char* reason_w_differs = "not isomorphic (W-components differ)";
inline constexpr const char* reason_no_witness = "isomorphic over C; no Q(w)-witness found";

IsoResult iso_witness(const StructureTensor& src, const StructureTensor& dst);
IsoResult iso_witness(const Independent2d& src, const Independent2d& dst);

// B with B m1 B^T == m2 for symmetric 2x2 matrices, optionally with a
// prescribed determinant. Square roots are taken in Q(w); rank-2 forms use
// a bounded search for a representation of the first diagonal entry.
std::optional<EisMatrix> find_congruence(const EisMatrix& m1, const EisMatrix& m2,
                                         const std::optional<EisScalar>& det = std::nullopt);

enum class IdealStructure { Abelian, Simple, HasIdeal, Indeterminate };
const char* to_string(IdealStructure s);

struct SimplicityEntry {
  IdealStructure structure = IdealStructure::Indeterminate;
  std::vector<Subspace> ideals;
};

SimplicityEntry simplicity_of(const StructureTensor& c);
std::map<ClassLabel, SimplicityEntry> simplicity_table();

} // namespace omegalie
