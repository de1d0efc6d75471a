#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "ifc/classify.hpp"
#include "ifc/cnd.hpp"
#include "ifc/oracle.hpp"
#include "ifc/piecewise.hpp"

namespace ifc::io {

using Json = nlohmann::ordered_json;

// Numbers, with "inf" / "-inf" string sentinels for the infinities.
Json to_json(ExtReal x);
ExtReal ext_real_from_json(const Json& j);

Json to_json(const ExtInterval& a);
ExtInterval interval_from_json(const Json& j);

Json to_json(const PieceExpr& e);
PieceExpr expr_from_json(const Json& j);

/// {"domain": [a, b], "breakpoints": [...], "pieces": [{"lower": e, "upper": e}, ...],
///  "breakpoint_values": [[l, u], ...]}; doubles round-trip bit for bit.
Json to_json(const PiecewiseIntervalFn& f);
PiecewiseIntervalFn function_from_json(const Json& j);

// {"domain": [a, b], "gamma": [...], "pieces": [e, ...]}
Json to_json(const CndFunction& u);
CndFunction cnd_from_json(const Json& j);

Json to_json(const ContinuityReport& c, const FinitenessReport& f);
Json to_json(const CrosscheckReport& r);

// Parse errors and schema violations throw ValidationError.
Json parse(const std::string& text);
Json read_file(const std::string& path);
std::string dump(const Json& j);

// "x,lower,upper" rows at n evenly spaced points of [a, b].
void write_plot_csv(std::ostream& os, const PiecewiseIntervalFn& f, Window window, std::size_t n);
// "x,lower,upper" rows for the breakpoint values inside [a, b].
void write_breakpoint_csv(std::ostream& os, const PiecewiseIntervalFn& f, Window window);
// "x,exact_lower,exact_upper,grid_lower,grid_upper,deviation" rows.
void write_crosscheck_csv(std::ostream& os, const CrosscheckReport& r);

}  // namespace ifc::io
