#ifndef EQTORIC_REPORT_HPP
#define EQTORIC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqtoric/io.hpp"

namespace eqtoric {

enum class Status { Pass, Fail, Error };

const char* status_name(Status s);
Status status_from_name(const std::string& name);

/// 0 pass, 1 mathematical failure, 2 usage, parse or precondition error.
int exit_code(Status s);

struct Finding {
    std::string kind;                  ///< e.g. "extension", "singular-cone"
    std::vector<std::size_t> cones;    ///< maximal cone indices involved
    std::optional<std::size_t> block;  ///< 0-based block index
    std::string value;                 ///< offending pairing, identity or factor
    std::string message;

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct Report {
    std::string command;
    Status status = Status::Pass;
    std::string summary;
    std::vector<std::string> details;  ///< extra human-readable lines
    std::vector<Finding> findings;
    io::Json result;                   ///< machine payload, null when absent

    friend bool operator==(const Report&, const Report&) = default;
};

io::Json to_json(const Report& report);
Report report_from_json(const io::Json& j);

/// Human-readable rendering: summary, details, one line per finding.
std::string render_text(const Report& report);

}  // namespace eqtoric

#endif
