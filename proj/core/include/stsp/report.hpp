#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stsp {

/// Ordered key/value pairs describing one drawn instance.
using Binding = std::vector<std::pair<std::string, std::string>>;

enum class Outcome { pass, fail, skip };
enum class Exactness { image_level, exact };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skip:
      return "skip";
  }
  return "?";
}

inline const char* to_string(Exactness e) { return e == Exactness::exact ? "exact" : "image-level"; }

/// One verification row: suite, entry (relation family or catalog id),
/// the binding it was checked at, and the outcome.
struct Record {
  std::string suite;
  std::string entry;
  Binding binding;
  Outcome result = Outcome::pass;
  Exactness exactness = Exactness::image_level;
  std::string note;
};

class Report {
 public:
  void add(Record r) {
    if (r.result == Outcome::fail) ++failures_;
    if (r.result == Outcome::pass) ++passes_;
    records_.push_back(std::move(r));
  }

  void merge(const Report& o) {
    for (const auto& r : o.records_) add(r);
  }

  const std::vector<Record>& records() const noexcept { return records_; }
  std::uint64_t failures() const noexcept { return failures_; }
  std::uint64_t passes() const noexcept { return passes_; }
  bool passed() const noexcept { return failures_ == 0; }

  /// Passing rows whose entry equals `entry`.
  std::uint64_t passes_for(const std::string& entry) const {
    std::uint64_t n = 0;
    for (const auto& r : records_)
      if (r.entry == entry && r.result == Outcome::pass) ++n;
    return n;
  }

 private:
  std::vector<Record> records_;
  std::uint64_t failures_ = 0;
  std::uint64_t passes_ = 0;
};

/// Common knobs of the randomized suites.
struct SuiteOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  long bound = 8;  // draws over Z are uniform in [-bound, bound]
};

}  // namespace stsp
