#include "binomsum/errors.hpp"

#include <mutex>

namespace binomsum {

namespace {
std::mutex g_fault_mutex;
std::string g_fault;
}  // namespace

FalsificationError::FalsificationError(std::string operation,
                                       std::map<std::string, std::int64_t> parameters,
                                       const std::string& detail)
    : std::runtime_error(operation + ": " + detail),
      operation_(std::move(operation)),
      parameters_(std::move(parameters)),
      detail_(detail) {}

void set_injected_fault(std::string operation) {
  std::lock_guard lock(g_fault_mutex);
  g_fault = std::move(operation);
}

bool fault_injected(std::string_view operation) {
  std::lock_guard lock(g_fault_mutex);
  return !g_fault.empty() && g_fault == operation;
}

}  // namespace binomsum
