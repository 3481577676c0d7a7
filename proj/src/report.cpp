#include "eqtoric/report.hpp"

#include <sstream>

namespace eqtoric {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

Status status_from_name(const std::string& name) {
    if (name == "pass") return Status::Pass;
    if (name == "fail") return Status::Fail;
    if (name == "error") return Status::Error;
    throw Error(ErrorCode::Parse, "unknown status '" + name + "'");
}

int exit_code(Status s) {
    switch (s) {
        case Status::Pass: return 0;
        case Status::Fail: return 1;
        case Status::Error: return 2;
    }
    return 2;
}

io::Json to_json(const Report& report) {
    io::Json findings = io::Json::array();
    for (const auto& f : report.findings) {
        io::Json j{{"kind", f.kind}, {"cones", f.cones}};
        j["block"] = f.block ? io::Json(*f.block) : io::Json(nullptr);
        j["value"] = f.value;
        j["message"] = f.message;
        findings.push_back(std::move(j));
    }
    io::Json out{{"command", report.command},
                 {"status", status_name(report.status)},
                 {"exit_code", exit_code(report.status)},
                 {"summary", report.summary},
                 {"details", report.details},
                 {"findings", std::move(findings)}};
    out["result"] = report.result;
    return out;
}

Report report_from_json(const io::Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "report: expected an object");
    try {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.status = status_from_name(j.at("status").get<std::string>());
        r.summary = j.at("summary").get<std::string>();
        r.details = j.at("details").get<std::vector<std::string>>();
        for (const auto& f : j.at("findings")) {
            Finding finding;
            finding.kind = f.at("kind").get<std::string>();
            finding.cones = f.at("cones").get<std::vector<std::size_t>>();
            if (!f.at("block").is_null()) finding.block = f.at("block").get<std::size_t>();
            finding.value = f.at("value").get<std::string>();
            finding.message = f.at("message").get<std::string>();
            r.findings.push_back(std::move(finding));
        }
        r.result = j.at("result");
        if (j.contains("exit_code") && j.at("exit_code").get<int>() != exit_code(r.status))
            throw Error(ErrorCode::Parse, "report: exit_code disagrees with status");
        return r;
    } catch (const io::Json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("report: ") + e.what());
    }
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << report.summary << "\n";
    for (const auto& d : report.details) out << "  " << d << "\n";
    for (const auto& f : report.findings) out << "  - " << f.message << "\n";
    return out.str();
}

}  // namespace eqtoric
