#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "majorana/dynamics.hpp"
#include "majorana/hamiltonian.hpp"
#include "majorana/kings.hpp"
#include "majorana/multipoles.hpp"
#include "majorana/stellar.hpp"

namespace majorana {

// JSON readers throw InvalidArgument on malformed documents or invariant
// violations. Writers emit compact JSON terminated by a newline; doubles use
// the shortest representation that round-trips exactly.

std::string to_json(const SpinState& state);
SpinState spin_state_from_json(std::string_view text);

// Root form {"twoS","roots","infinity_count"} or, with angles, {"twoS","stars"}.
std::string to_json(const Constellation& constellation, bool angles = false);
// Accepts both forms; the angular form may omit twoS.
Constellation constellation_from_json(std::string_view text);

// upto < 0 writes every order; otherwise rho/w are limited to K <= upto and A
// to M <= upto.
std::string to_json(const MultipoleSpectrum& spectrum, int upto = -1);

std::string to_json(const KingResult& result);

// One line per snapshot.
std::string to_jsonl(const StarTrajectory& trajectory);

// {"twoS", "matrix"} or {"builtin", "coupling"}; the builtin form takes its
// spin from `label` unless the document names twoS.
Hamiltonian hamiltonian_from_json(std::string_view text, std::optional<SpinLabel> label = std::nullopt);

// "theta,phi,Q" header then theta-major rows, %.17g.
std::string to_csv(const QGrid& grid);

}  // namespace majorana
