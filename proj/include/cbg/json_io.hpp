#ifndef CBG_JSON_IO_HPP
#define CBG_JSON_IO_HPP

#include <json.hpp>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"
#include "cbg/constructions.hpp"
#include "cbg/search.hpp"
#include "cbg/verify.hpp"

namespace cbg {

// Machine-readable output uses ordered_json throughout so key order, and
// with it the emitted bytes, are stable across runs and worker counts.
using json = nlohmann::ordered_json;

json vertex_array(Mask m);

json json_of(const SearchStats& s);
json json_of(const SearchRecord& r);
// Search record plus the empirical intercept (1+k)n/2 - m_min.
json json_of_conjecture_row(const SearchRecord& r);
json json_of(const BoundVerdict& v);
json json_of(const Recognition& r);
json json_of(const Lemma5Report& r);
json json_of(const ProofClaimsReport& r);
json json_of(const NamedGraph& g);
json json_of(const CutReport& r);
json json_of(const FilterStats& s);

}  // namespace cbg

#endif  // CBG_JSON_IO_HPP
