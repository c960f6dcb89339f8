#pragma once

#include <string>
#include <vector>

namespace maghom {

/// Outcome of a verification routine: the verdict, what failed, and remarks
/// that do not affect the verdict.
struct Report {
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
  void note(std::string message) { notes.push_back(std::move(message)); }
  void merge(const Report& other) {
    passed = passed && other.passed;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace maghom
