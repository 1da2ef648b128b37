#ifndef FHJ_ERRORS_HPP
#define FHJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fhj {

/// Thrown when a computation produces non-finite values or trips a
/// numerical guard (blow-up detection, inconsistent ledger, broken
/// spectral symmetry). Distinct from invalid_argument so callers can
/// map it to a dedicated exit code.
class NumericalAbort : public std::runtime_error {
 public:
  explicit NumericalAbort(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fhj

#endif
