#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binomsum {

/// A checked claim turned out false. Carries enough to reproduce the counterexample.
class FalsificationError : public std::runtime_error {
 public:
  FalsificationError(std::string operation, std::map<std::string, std::int64_t> parameters,
                     const std::string& detail);

  const std::string& operation() const { return operation_; }
  const std::map<std::string, std::int64_t>& parameters() const { return parameters_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string operation_;
  std::map<std::string, std::int64_t> parameters_;
  std::string detail_;
};

/// Test hook: make the named check corrupt its own result so the falsification
/// path can be exercised end to end. Empty string disables.
void set_injected_fault(std::string operation);
bool fault_injected(std::string_view operation);

}  // namespace binomsum
