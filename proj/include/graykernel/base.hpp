#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

struct MalformedTable : std::runtime_error {
  explicit MalformedTable(const std::string& what) : std::runtime_error("MalformedTable: " + what) {}
};
struct BoundaryMismatch : std::runtime_error {
  explicit BoundaryMismatch(const std::string& what) : std::runtime_error("BoundaryMismatch: " + what) {}
};
struct NotComposable : std::runtime_error {
  explicit NotComposable(const std::string& what) : std::runtime_error("NotComposable: " + what) {}
};
struct NotATwoCell : std::runtime_error {
  explicit NotATwoCell(const std::string& what) : std::runtime_error("NotATwoCell: " + what) {}
};
struct NonThreadingWord : std::runtime_error {
  explicit NonThreadingWord(const std::string& what) : std::runtime_error("NonThreadingWord: " + what) {}
};
struct EnumerationTooLarge : std::runtime_error {
  explicit EnumerationTooLarge(const std::string& what) : std::runtime_error("EnumerationTooLarge: " + what) {}
};
struct InfiniteEnumeration : std::runtime_error {
  explicit InfiniteEnumeration(const std::string& what) : std::runtime_error("InfiniteEnumeration: " + what) {}
};
struct NotCubical : std::runtime_error {
  explicit NotCubical(const std::string& what) : std::runtime_error("NotCubical: " + what) {}
};
struct NotInImage : std::runtime_error {
  explicit NotInImage(const std::string& what) : std::runtime_error("NotInImage: " + what) {}
};
struct ArityBound : std::runtime_error {
  explicit ArityBound(const std::string& what) : std::runtime_error("ArityBound: " + what) {}
};
struct AxiomViolation : std::runtime_error {
  explicit AxiomViolation(const std::string& what) : std::runtime_error("AxiomViolation: " + what) {}
};
struct NotEquivalence : std::runtime_error {
  explicit NotEquivalence(const std::string& what) : std::runtime_error("NotEquivalence: " + what) {}
};
struct PreconditionUnmet : std::runtime_error {
  explicit PreconditionUnmet(const std::string& what) : std::runtime_error("PreconditionUnmet: " + what) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error("ParseError: " + what) {}
};

// One violated law instance: which law, and the cells witnessing the failure.
struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;
};

class ValidationReport {
 public:
  void add(std::string law, std::vector<std::string> witness, std::string detail = {}) {
    violations_.push_back({std::move(law), std::move(witness), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  std::string pretty() const {
    if (violations_.empty()) return "ok\n";
    std::string out;
    for (const auto& v : violations_) {
      out += v.law + " [";
      for (size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out += ", ";
        out += v.witness[i];
      }
      out += "]";
      if (!v.detail.empty()) out += " " + v.detail;
      out += "\n";
    }
    return out;
  }

 private:
  std::vector<Violation> violations_;
};

// Global enumeration cap (objects per enumerated structure). Mirrors
// GRAYKERNEL_MAX_CELLS and the --max-cells CLI flag.
std::size_t max_cells();
void set_max_cells(std::size_t cap);

}  // namespace gk
