#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hubloc {

// Malformed input files, bad arguments, violated preconditions on user data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance is well-formed but has no finite solution: some deliveries
// cannot be reached from any hub.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::vector<std::string> delivery_ids)
      : std::runtime_error(what), delivery_ids_(std::move(delivery_ids)) {}

  const std::vector<std::string>& delivery_ids() const noexcept { return delivery_ids_; }

 private:
  std::vector<std::string> delivery_ids_;
};

}  // namespace hubloc
