#pragma once

#include <string>
#include <vector>

namespace contra {

/// Outcome of an axiom check: the names of the identities that failed.
struct Verdict {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  explicit operator bool() const { return ok(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const Verdict& other, const std::string& prefix = "") {
    for (const auto& f : other.failures) failures.push_back(prefix + f);
  }
};

}  // namespace contra
