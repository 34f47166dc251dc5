#pragma once

#include <optional>
#include <vector>

#include "oml/lattice.hpp"

namespace oml::detail {

using Witness = std::optional<std::vector<Element>>;

/// Runs axiom checks in order. Each check returns the first witness it
/// finds, or nullopt. In first-failure mode the remaining checks are skipped
/// once anything fails.
class AxiomScan {
 public:
  explicit AxiomScan(bool stop_at_first = false) : stop_at_first_(stop_at_first) {}

  template <typename Check>
  void run(const char* axiom_id, Check&& check) {
    if (stopped_) return;
    if (Witness w = check()) {
      report_.violations.push_back({axiom_id, std::move(*w)});
      if (stop_at_first_) stopped_ = true;
    }
  }

  void halt() { stopped_ = true; }
  bool passed() const { return report_.passed(); }
  ValidationReport take() { return std::move(report_); }

 private:
  bool stop_at_first_;
  bool stopped_ = false;
  ValidationReport report_;
};

}  // namespace oml::detail
