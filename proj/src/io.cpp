#include "triality/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace triality {

namespace {

Complex parse_complex(const nlohmann::json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
        throw Error(ErrorCode::ParseError,
                    std::string(where) + " entries must be [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

StateFile parse_state_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw Error(ErrorCode::ParseError,
                    "state file must be an object with a \"kind\" string");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "pure") {
        if (!j.contains("amplitudes") || !j["amplitudes"].is_array() ||
            j["amplitudes"].size() != 4) {
            throw Error(ErrorCode::ParseError,
                        "pure state needs \"amplitudes\" with 4 entries");
        }
        Eigen::Vector4cd amps;
        for (int i = 0; i < 4; ++i) {
            amps(i) = parse_complex(j["amplitudes"][size_t(i)], "amplitudes");
        }
        StateFile out;
        out.pure = make_pure(amps);
        out.density = to_density(*out.pure);
        return out;
    }
    if (kind == "mixed") {
        if (!j.contains("rho") || !j["rho"].is_array() || j["rho"].size() != 4) {
            throw Error(ErrorCode::ParseError,
                        "mixed state needs \"rho\" with 4 rows");
        }
        Eigen::Matrix4cd m;
        for (int i = 0; i < 4; ++i) {
            const auto& row = j["rho"][size_t(i)];
            if (!row.is_array() || row.size() != 4) {
                throw Error(ErrorCode::ParseError,
                            "each rho row needs 4 entries");
            }
            for (int c = 0; c < 4; ++c) {
                m(i, c) = parse_complex(row[size_t(c)], "rho");
            }
        }
        return StateFile{std::nullopt, validate_density(m)};
    }
    throw Error(ErrorCode::ParseError,
                "unknown state kind \"" + kind + "\" (want pure or mixed)");
}

StateFile load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const std::exception& e) {
        // a directory path opens fine but the filebuf throws on read
        throw Error(ErrorCode::ParseError,
                    "cannot read " + path + ": " + e.what());
    }
    return parse_state_json(j);
}

double round_sig12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

nlohmann::ordered_json report_to_json(const ComplementarityReport& report) {
    nlohmann::ordered_json j;
    j["pure"] = report.pure;
    j["concurrence"] = round_sig12(report.concurrence);
    j["V1"] = round_sig12(report.v1);
    j["V2"] = round_sig12(report.v2);
    j["P1"] = round_sig12(report.p1);
    j["P2"] = round_sig12(report.p2);
    j["S1"] = round_sig12(report.s1);
    j["S2"] = round_sig12(report.s2);
    j["eof"] = round_sig12(report.eof);
    j["D1"] = round_sig12(report.d1);
    j["D2"] = round_sig12(report.d2);
    j["c1"] = round_sig12(report.c1);
    j["c2"] = round_sig12(report.c2);
    if (report.bell) {
        j["bell"] = round_sig12(*report.bell);
    }
    j["triality_residual_1"] = round_sig12(report.triality_residual_1);
    j["triality_residual_2"] = round_sig12(report.triality_residual_2);
    if (report.derived_identity_defined) {
        j["derived_identity_defined"] = true;
    }
    return j;
}

}  // namespace triality
