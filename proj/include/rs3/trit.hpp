// The three-element chain 0 < u < 1 together with every operation used by
// the library: lattice meet/join, the De Morgan polarity, the Lukasiewicz
// possibility/necessity operators, both pseudocomplements, and the Heyting
// and Nelson implications. All operations are spelled out as exhaustive
// tables so tests can compare them against the textbook tables literally.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rs3 {

enum class Trit : std::uint8_t { zero = 0, u = 1, one = 2 };

inline constexpr std::array<Trit, 3> all_trits{Trit::zero, Trit::u, Trit::one};

constexpr int trit_index(Trit a) { return static_cast<int>(a); }

// chain order 0 < u < 1
constexpr bool trit_le(Trit a, Trit b) { return trit_index(a) <= trit_index(b); }
constexpr bool trit_lt(Trit a, Trit b) { return trit_index(a) < trit_index(b); }

namespace trit_tables {

inline constexpr Trit Z = Trit::zero;
inline constexpr Trit U = Trit::u;
inline constexpr Trit I = Trit::one;

inline constexpr std::array<std::array<Trit, 3>, 3> meet{{
    {Z, Z, Z},
    {Z, U, U},
    {Z, U, I},
}};

inline constexpr std::array<std::array<Trit, 3>, 3> join{{
    {Z, U, I},
    {U, U, I},
    {I, I, I},
}};

// ~: 0->1, u->u, 1->0
inline constexpr std::array<Trit, 3> neg{I, U, Z};

// possibility: 0->0, u->1, 1->1
inline constexpr std::array<Trit, 3> poss{Z, I, I};

// necessity: 0->0, u->0, 1->1
inline constexpr std::array<Trit, 3> nec{Z, Z, I};

// pseudocomplement: 0->1, u->0, 1->0
inline constexpr std::array<Trit, 3> star{I, Z, Z};

// dual pseudocomplement: 0->1, u->1, 1->0
inline constexpr std::array<Trit, 3> plus{I, I, Z};

// a => b: 1 when a <= b, else b
inline constexpr std::array<std::array<Trit, 3>, 3> heyting{{
    {I, I, I},
    {Z, I, I},
    {Z, U, I},
}};

// a -> b: rows 0 and u map everything to 1, row 1 is the identity
inline constexpr std::array<std::array<Trit, 3>, 3> nelson{{
    {I, I, I},
    {I, I, I},
    {Z, U, I},
}};

}  // namespace trit_tables

constexpr Trit meet(Trit a, Trit b) { return trit_tables::meet[trit_index(a)][trit_index(b)]; }
constexpr Trit join(Trit a, Trit b) { return trit_tables::join[trit_index(a)][trit_index(b)]; }
constexpr Trit neg(Trit a) { return trit_tables::neg[trit_index(a)]; }
constexpr Trit poss(Trit a) { return trit_tables::poss[trit_index(a)]; }
constexpr Trit nec(Trit a) { return trit_tables::nec[trit_index(a)]; }
constexpr Trit star(Trit a) { return trit_tables::star[trit_index(a)]; }
constexpr Trit plus(Trit a) { return trit_tables::plus[trit_index(a)]; }
constexpr Trit heyting(Trit a, Trit b) { return trit_tables::heyting[trit_index(a)][trit_index(b)]; }
constexpr Trit nelson(Trit a, Trit b) { return trit_tables::nelson[trit_index(a)][trit_index(b)]; }

// Canonical text rendering is "0" | "u" | "1", case sensitive.
constexpr char trit_char(Trit a) {
  switch (a) {
    case Trit::zero: return '0';
    case Trit::u: return 'u';
    case Trit::one: return '1';
  }
  return '?';
}

inline std::string trit_string(Trit a) { return std::string(1, trit_char(a)); }

inline std::optional<Trit> trit_from_string(std::string_view s) {
  if (s == "0") return Trit::zero;
  if (s == "u") return Trit::u;
  if (s == "1") return Trit::one;
  return std::nullopt;
}

// Named operations, used for dispatch in pair formulas, closure flags,
// the CLI and the bindings.
enum class UnaryOp { neg, poss, nec, star, plus };
enum class BinaryOp { meet, join, heyting, nelson };

inline constexpr std::array<UnaryOp, 5> all_unary_ops{
    UnaryOp::neg, UnaryOp::poss, UnaryOp::nec, UnaryOp::star, UnaryOp::plus};
inline constexpr std::array<BinaryOp, 4> all_binary_ops{
    BinaryOp::meet, BinaryOp::join, BinaryOp::heyting, BinaryOp::nelson};

constexpr Trit apply(UnaryOp op, Trit a) {
  switch (op) {
    case UnaryOp::neg: return neg(a);
    case UnaryOp::poss: return poss(a);
    case UnaryOp::nec: return nec(a);
    case UnaryOp::star: return star(a);
    case UnaryOp::plus: return plus(a);
  }
  return a;
}

constexpr Trit apply(BinaryOp op, Trit a, Trit b) {
  switch (op) {
    case BinaryOp::meet: return meet(a, b);
    case BinaryOp::join: return join(a, b);
    case BinaryOp::heyting: return heyting(a, b);
    case BinaryOp::nelson: return nelson(a, b);
  }
  return a;
}

constexpr std::string_view op_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::neg: return "~";
    case UnaryOp::poss: return "poss";
    case UnaryOp::nec: return "nec";
    case UnaryOp::star: return "*";
    case UnaryOp::plus: return "+";
  }
  return "?";
}

constexpr std::string_view op_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::meet: return "meet";
    case BinaryOp::join: return "join";
    case BinaryOp::heyting: return "=>";
    case BinaryOp::nelson: return "->";
  }
  return "?";
}

}  // namespace rs3
