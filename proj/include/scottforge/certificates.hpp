#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "scottforge/product.hpp"

namespace scottforge {

/// Deterministic bytes for any serialized library value: keys sorted,
/// no insignificant whitespace, naturals decimal, omega as "omega".
std::string canonical_json(const nlohmann::json& value);

struct ValidationReport {
    bool ok = false;
    std::string error;                        // parse/schema/whitelist problem, if any
    std::optional<std::size_t> failed_index;  // first evaluation that did not replay
    std::string failed_check;

    std::string describe() const;
};

/// Re-executes every recorded evaluation of a certificate with library
/// primitives and re-derives the chain member from the stored base function.
/// Only whitelisted pure primitives are ever dispatched; certificates are
/// untrusted input.
ValidationReport validate(const nlohmann::json& cert_doc);

bool is_whitelisted_check(const std::string& name);

/// Replays one evaluation; throws std::invalid_argument on a non-whitelisted
/// name or malformed arguments.
bool replay_evaluation(const Evaluation& e);

}  // namespace scottforge
