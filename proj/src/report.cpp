#include "hopfrob/report.hpp"

#include <stdexcept>

namespace hopfrob {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
        case Status::Undetermined: return "undetermined";
    }
    return "?";
}

Check& Report::add(std::string name, bool ok, std::string witness, std::string anchor, std::string detail) {
    if (ok) witness.clear();
    if (!ok && witness.empty()) witness = "-";
    return add_status(std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness), std::move(anchor),
                      std::move(detail));
}

Check& Report::add_status(std::string name, Status s, std::string witness, std::string anchor, std::string detail) {
    checks.push_back({std::move(name), s, std::move(witness), std::move(anchor), std::move(detail)});
    return checks.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        if (!prefix.empty()) c.name = prefix + "." + c.name;
        checks.push_back(std::move(c));
    }
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (c.status == Status::Fail || c.status == Status::Undetermined) return false;
    return true;
}

bool Report::passed(const std::string& name) const {
    const Check* c = find(name);
    if (!c) throw std::out_of_range("no check named " + name);
    return c->status == Status::Pass;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<const Check*> Report::failures() const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
        if (c.status == Status::Fail) out.push_back(&c);
    return out;
}

std::string Report::text() const {
    std::string out;
    if (!title.empty()) out += "# " + title + "\n";
    for (const auto& c : checks) {
        out += std::string(status_name(c.status)) + "  " + c.name;
        if (!c.anchor.empty()) out += "  [" + c.anchor + "]";
        if (!c.witness.empty()) out += "  witness=" + c.witness;
        if (!c.detail.empty()) out += "  " + c.detail;
        out += "\n";
    }
    return out;
}

}  // namespace hopfrob
