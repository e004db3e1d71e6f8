// A finite, ordered universe of named elements. The element order is fixed
// at construction and drives every canonical rendering and enumeration in
// the library. Instances are immutable and cheap to copy.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rs3 {

class Universe {
 public:
  // Subsets are stored as bits of one 32-bit word.
  static constexpr std::size_t max_size = 31;

  explicit Universe(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->empty()) throw std::invalid_argument("universe must have at least one element");
    if (names_->size() > max_size)
      throw std::invalid_argument("universe too large (max " + std::to_string(max_size) + ")");
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i].empty()) throw std::invalid_argument("universe element name must be non-empty");
      for (std::size_t j = i + 1; j < names_->size(); ++j)
        if ((*names_)[i] == (*names_)[j])
          throw std::invalid_argument("duplicate universe element: " + (*names_)[i]);
    }
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }

  std::uint32_t full_mask() const { return (std::uint32_t{1} << size()) - 1; }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Canonical universe "x1".."xn" used by sweeps and enumerations.
inline Universe default_universe(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Universe(std::move(names));
}

inline void require_same_universe(const Universe& a, const Universe& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": universe mismatch");
}

}  // namespace rs3
