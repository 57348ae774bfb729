#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "agree/core.hpp"
#include "agree/search.hpp"
#include "agree/squash.hpp"

namespace agree {

/// Malformed input file or JSON value; the message names the offending
/// field or position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": 5, "sets": [[1,3],[2],...]} or, with hex=true,
/// {"n": 5, "masks": ["0x5","0x2",...]}.  Both round-trip bit-exactly.
nlohmann::json family_to_json(const Family& fam, bool hex = false);

/// Accepts either of the two forms above.
Family family_from_json(const nlohmann::json& j);

/// Parses a whole stream as one family document; errors carry the source
/// name plus parse diagnostics.
Family family_from_stream(std::istream& in, const std::string& source);

nlohmann::json witness_to_json(const TupleWitness& w, GroundSet ground);

nlohmann::json trace_to_json(const SquashTrace& trace);

/// Deterministic body: timing is deliberately left out so identical
/// single-worker invocations serialize identically.
nlohmann::json search_result_to_json(const SearchResult& res);

nlohmann::json uniqueness_to_json(const UniquenessReport& rep);

/// "0x" + 16 lowercase hex digits.
std::string digest_hex(std::uint64_t value);

}  // namespace agree
