#pragma once

#include <string>
#include <vector>

namespace sdl {

/// Line-oriented verification report.
///
/// Rendered as one line per entry: `PASS name`, `FAIL name witness=...` or
/// `INFO name=value`. A report is ok when it holds no FAIL entries.
class Report {
 public:
  enum class Status { Pass, Fail, Info };

  struct Entry {
    Status status;
    std::string name;
    std::string detail;
  };

  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string witness);
  void info(std::string name, std::string value);
  /// Records a pass or a fail depending on `ok`.
  void check(bool ok, std::string name, std::string witness = {});
  /// Appends every entry of `other`, prefixing names with `prefix.` when non-empty.
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(const std::string& name) const;
  std::string str() const;

 private:
  std::vector<Entry> entries_;
};

/// Result of a single yes/no check carrying a witness on failure.
struct Verdict {
  bool pass = true;
  std::string witness;

  explicit operator bool() const { return pass; }
  static Verdict ok() { return {}; }
  static Verdict failed(std::string w) { return {false, std::move(w)}; }
};

}  // namespace sdl
