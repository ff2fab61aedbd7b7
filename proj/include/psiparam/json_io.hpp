#pragma once

#include <variant>

#include <json.hpp>

#include "psiparam/algebra.hpp"
#include "psiparam/density.hpp"
#include "psiparam/matrix.hpp"
#include "psiparam/paths.hpp"
#include "psiparam/simplex.hpp"
#include "psiparam/sphere.hpp"

namespace psiparam {

// Wire formats:
//   ProbDist      {"p": [numbers]}
//   Event         {"indices": [ints]}               (1-based)
//   EulerAngles   {"theta": [numbers]}
//   WaveFunction  {"amplitudes": [...], "algebra": "real"|"complex"|"quaternion"}
//                 complex scalars as [re, im], quaternions as [a, b, c, d]
//   Matrix        {"matrix": [[row], [row], ...]}   (row-major)
//   WalkSpec      {"steps": T, "q": [numbers]}
//   paths output  ProbDist format plus "ordering": "lex-down0"

using AnyWaveFunction = std::variant<WaveFunction, ComplexWaveFunction, QuaternionWaveFunction>;

nlohmann::json to_json(const ProbDist& dist);
nlohmann::json to_json(const Event& event);
nlohmann::json to_json(const EulerAngles& angles);
nlohmann::json to_json(const WaveFunction& psi);
nlohmann::json to_json(const ComplexWaveFunction& psi);
nlohmann::json to_json(const QuaternionWaveFunction& psi);
nlohmann::json to_json(const AnyWaveFunction& psi);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const PathDistribution& paths);

ProbDist prob_dist_from_json(const nlohmann::json& j);
Event event_from_json(const nlohmann::json& j);
EulerAngles euler_angles_from_json(const nlohmann::json& j);
AnyWaveFunction wavefunction_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);
WalkSpec walk_spec_from_json(const nlohmann::json& j);

/// Born probabilities for a wave-function over any scalar algebra.
ProbDist born_decode_any(const AnyWaveFunction& psi);

}  // namespace psiparam
