#pragma once

#include <string>
#include <vector>

namespace hopfrob {

enum class Status { Pass, Fail, Skipped, Undetermined };

const char* status_name(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string witness;  // offending multi-index or values; set on every failure
    std::string anchor;   // claim label, e.g. "h8.trace"
    std::string detail;   // computed values worth reporting
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    Check& add(std::string name, bool ok, std::string witness = {}, std::string anchor = {}, std::string detail = {});
    Check& add_status(std::string name, Status s, std::string witness = {}, std::string anchor = {},
                      std::string detail = {});
    // Appends other's checks with names prefixed by "prefix.".
    void merge(const Report& other, const std::string& prefix = {});

    bool all_pass() const;  // skipped checks do not count as failures
    bool passed(const std::string& name) const;
    const Check* find(const std::string& name) const;
    std::vector<const Check*> failures() const;

    std::string text() const;
};

}  // namespace hopfrob
