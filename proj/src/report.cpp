#include "sdl/report.hpp"

#include <sstream>

namespace sdl {

void Report::pass(std::string name, std::string detail) {
  entries_.push_back({Status::Pass, std::move(name), std::move(detail)});
}

void Report::fail(std::string name, std::string witness) {
  entries_.push_back({Status::Fail, std::move(name), std::move(witness)});
}

void Report::info(std::string name, std::string value) {
  entries_.push_back({Status::Info, std::move(name), std::move(value)});
}

void Report::check(bool ok, std::string name, std::string witness) {
  if (ok) {
    pass(std::move(name));
  } else {
    fail(std::move(name), std::move(witness));
  }
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    auto name = prefix.empty() ? e.name : prefix + "." + e.name;
    entries_.push_back({e.status, std::move(name), e.detail});
  }
}

bool Report::ok() const {
  for (const auto& e : entries_) {
    if (e.status == Status::Fail) return false;
  }
  return true;
}

const Report::Entry* Report::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string Report::str() const {
  std::ostringstream out;
  for (const auto& e : entries_) {
    switch (e.status) {
      case Status::Pass:
        out << "PASS " << e.name;
        if (!e.detail.empty()) out << ' ' << e.detail;
        break;
      case Status::Fail:
        out << "FAIL " << e.name << " witness=" << e.detail;
        break;
      case Status::Info:
        out << "INFO " << e.name << '=' << e.detail;
        break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sdl
