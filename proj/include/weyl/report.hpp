#ifndef WEYL_REPORT_HPP
#define WEYL_REPORT_HPP

#include <chrono>
#include <string>
#include <utility>

#include <json.hpp>

namespace weyl
{

enum class Status { pass, fail, error };

inline const char *to_string(Status s)
{
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::error:
            return "error";
    }
    return "error";
}

// Outcome of one identity instance. `witness` is empty on pass; on failure
// it carries the rendered difference (or worst numeric deviation).
struct VerificationReport {
    std::string suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Status status = Status::pass;
    std::string witness;
    double elapsed_ms = 0.0;
    // Suite-specific payload (sequence tables, polynomials, errors, ...).
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    [[nodiscard]] bool passed() const noexcept { return status == Status::pass; }

    // First failing check wins; later checks only add to the witness.
    void fail(const std::string &what)
    {
        if (status == Status::pass) {
            status = Status::fail;
        }
        if (!witness.empty()) {
            witness += "; ";
        }
        witness += what;
    }

    [[nodiscard]] nlohmann::ordered_json to_json(bool with_timing = true) const
    {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["params"] = params;
        j["status"] = to_string(status);
        j["witness"] = witness;
        j["elapsed_ms"] = with_timing ? elapsed_ms : 0.0;
        if (!data.empty()) {
            j["data"] = data;
        }
        return j;
    }
};

// Runs `body(report)` with timing, converting library exceptions into an
// error status.
template <class Body>
VerificationReport run_instance(std::string suite, nlohmann::ordered_json params, Body &&body)
{
    VerificationReport r;
    r.suite = std::move(suite);
    r.params = std::move(params);
    auto start = std::chrono::steady_clock::now();
    try {
        std::forward<Body>(body)(r);
    } catch (const std::exception &e) {
        r.status = Status::error;
        r.witness = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace weyl

#endif
