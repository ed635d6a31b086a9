#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowvf {

// Rejected polynomial text; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raw multigerm data violated a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid multigerm:";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

// Germ description file did not match the input schema.
class GermFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No d <= delta_max certifies m^d contained in the pullback ideal; the
// branch either has infinite local multiplicity or the bound is too small.
class DeltaNotCertified : public std::runtime_error {
 public:
  DeltaNotCertified(int branch, int delta_max)
      : std::runtime_error("delta(f_" + std::to_string(branch + 1) +
                           ") not certified finite up to bound delta_max=" +
                           std::to_string(delta_max)),
        branch_(branch),
        delta_max_(delta_max) {}
  int branch() const { return branch_; }
  int delta_max() const { return delta_max_; }

 private:
  int branch_;
  int delta_max_;
};

// Every candidate order up to ell_max failed the left-determinacy test.
class NotFinitelyDetermined : public std::runtime_error {
 public:
  NotFinitelyDetermined(int ell_max, std::string witness)
      : std::runtime_error("not finitely L-determined up to ell_max=" +
                           std::to_string(ell_max) + "; witness: " + witness),
        ell_max_(ell_max),
        witness_(std::move(witness)) {}
  int ell_max() const { return ell_max_; }
  const std::string& witness() const { return witness_; }

 private:
  int ell_max_;
  std::string witness_;
};

}  // namespace lowvf
