#include "psiparam/json_io.hpp"

#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_array())
        throw ValidationError("expected object with array field \"" + field + "\"");
    std::vector<double> out;
    out.reserve(j[field].size());
    for (const auto& v : j[field]) {
        if (!v.is_number())
            throw ValidationError("field \"" + field + "\" must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const ProbDist& dist) {
    return {{"p", dist.values()}};
}

nlohmann::json to_json(const Event& event) {
    return {{"indices", event.indices()}};
}

nlohmann::json to_json(const EulerAngles& angles) {
    return {{"theta", angles.theta()}};
}

nlohmann::json to_json(const WaveFunction& psi) {
    return {{"amplitudes", psi.amplitudes()}, {"algebra", "real"}};
}

nlohmann::json to_json(const ComplexWaveFunction& psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& v : psi.amplitudes()) amps.push_back({v.real(), v.imag()});
    return {{"amplitudes", std::move(amps)}, {"algebra", "complex"}};
}

nlohmann::json to_json(const QuaternionWaveFunction& psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& v : psi.amplitudes()) amps.push_back({v.w, v.x, v.y, v.z});
    return {{"amplitudes", std::move(amps)}, {"algebra", "quaternion"}};
}

nlohmann::json to_json(const AnyWaveFunction& psi) {
    return std::visit([](const auto& wf) { return to_json(wf); }, psi);
}

nlohmann::json to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return {{"matrix", std::move(rows)}};
}

nlohmann::json to_json(const PathDistribution& paths) {
    nlohmann::json j = to_json(paths.dist);
    j["ordering"] = "lex-down0";
    return j;
}

ProbDist prob_dist_from_json(const nlohmann::json& j) {
    return ProbDist(number_array(j, "p"));
}

Event event_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("indices") || !j["indices"].is_array())
        throw ValidationError("expected object with array field \"indices\"");
    std::vector<std::size_t> indices;
    for (const auto& v : j["indices"]) {
        if (!v.is_number_unsigned())
            throw ValidationError("field \"indices\" must contain non-negative integers");
        indices.push_back(v.get<std::size_t>());
    }
    return Event(std::move(indices));
}

EulerAngles euler_angles_from_json(const nlohmann::json& j) {
    return EulerAngles(number_array(j, "theta"));
}

AnyWaveFunction wavefunction_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw ValidationError("expected object with array field \"amplitudes\"");
    const std::string algebra = j.value("algebra", "real");
    const auto& amps = j["amplitudes"];
    if (algebra == "real") {
        std::vector<double> a;
        for (const auto& v : amps) {
            if (!v.is_number()) throw ValidationError("real amplitudes must be numbers");
            a.push_back(v.get<double>());
        }
        return WaveFunction(std::move(a));
    }
    if (algebra == "complex") {
        std::vector<std::complex<double>> a;
        for (const auto& v : amps) {
            if (!v.is_array() || v.size() != 2)
                throw ValidationError("complex amplitudes must be [re, im] pairs");
            a.emplace_back(v[0].get<double>(), v[1].get<double>());
        }
        return ComplexWaveFunction(std::move(a));
    }
    if (algebra == "quaternion") {
        std::vector<Quaternion> a;
        for (const auto& v : amps) {
            if (!v.is_array() || v.size() != 4)
                throw ValidationError("quaternion amplitudes must be [a, b, c, d] arrays");
            a.push_back(Quaternion{v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
                                   v[3].get<double>()});
        }
        return QuaternionWaveFunction(std::move(a));
    }
    throw ValidationError("unknown algebra tag \"" + algebra + "\"");
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
        throw ValidationError("expected object with array field \"matrix\"");
    const auto& rows = j["matrix"];
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
    Matrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (!rows[i].is_array() || rows[i].size() != ncols)
            throw ValidationError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < ncols; ++k) {
            if (!rows[i][k].is_number())
                throw ValidationError("matrix entries must be numbers");
            m(i, k) = rows[i][k].get<double>();
        }
    }
    return m;
}

WalkSpec walk_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_number_unsigned())
        throw ValidationError("expected object with unsigned field \"steps\"");
    const std::size_t steps = j["steps"].get<std::size_t>();
    const std::vector<double> q = number_array(j, "q");
    if (q.size() != steps)
        throw ValidationError("\"q\" must list one probability per step");
    return WalkSpec(q);
}

ProbDist born_decode_any(const AnyWaveFunction& psi) {
    return std::visit(
        [](const auto& wf) -> ProbDist {
            using T = std::decay_t<decltype(wf)>;
            if constexpr (std::is_same_v<T, WaveFunction>) {
                return born_decode(wf);
            } else {
                return marginal_born(wf);
            }
        },
        psi);
}

}  // namespace psiparam
