#pragma once

#include <string>

#include "json.hpp"
#include "katospec/enumerate.hpp"
#include "katospec/exponential.hpp"
#include "katospec/ring.hpp"
#include "katospec/theorems.hpp"

namespace katospec {

using ordered_json = nlohmann::ordered_json;

// Parsers throw Error(BadInput) on malformed or missing fields; structural
// validation (monoid laws, topology laws, base laws) happens in the
// constructors they call.
FiniteMonoid monoid_from_json(const ordered_json& j);
FinitePoset poset_from_json(const ordered_json& j);
FiniteSpace space_from_json(const ordered_json& j);

// Accepts {"size", "opens"} or {"size", "base"}; with "base" the listed
// members become the monoidal base, otherwise every open does.
BasedSpace based_space_from_json(const ordered_json& j);
FiniteRing ring_from_json(const ordered_json& j);

ordered_json json_of(const Mask& m);
ordered_json json_of(const FiniteMonoid& m);
ordered_json json_of(const FinitePoset& p);
ordered_json json_of(const FiniteSpace& x);
ordered_json json_of(const SpecSpace& s);
ordered_json json_of(const ExpSpace& e);
ordered_json json_of(const StarCertificate& c);
ordered_json json_of(const ConditionReport& r);
ordered_json json_of(const ExpCharReport& r);
ordered_json json_of(const HochsterReport& r);
ordered_json json_of(const ClassificationResult& r);
ordered_json json_of(const SuiteResult& r);

// Two-space indentation, stable key order; the byte-level format the suite
// determinism guarantee refers to.
std::string dump_json(const ordered_json& j);

}  // namespace katospec
