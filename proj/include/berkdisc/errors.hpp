#ifndef BERKDISC_ERRORS_HPP
#define BERKDISC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace berkdisc {

/* Every domain failure carries a stable machine-readable name next to the
   human message. The names are part of the library contract: the CLI prints
   them verbatim in error reports and tests match on them. */
class domain_failure : public std::runtime_error {
public:
    domain_failure(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& msg) {
    throw domain_failure(name, msg);
}

} // namespace berkdisc

#endif
