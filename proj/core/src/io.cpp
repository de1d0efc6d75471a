#include "ifc/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace ifc::io {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError(std::string("expected a JSON object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return j.get<double>();
}

double optional_number(const Json& j, const char* key, double fallback) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : finite_number(*it, key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ValidationError(std::string("field \"") + key + "\" must be an array");
  return a;
}

Domain domain_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ValidationError("domain must be a two-element array");
  return Domain(ext_real_from_json(j[0]), ext_real_from_json(j[1]));
}

Json domain_to_json(const Domain& d) { return Json::array({to_json(d.left), to_json(d.right)}); }

std::vector<double> points_from_json(const Json& a, const char* what) {
  std::vector<double> out;
  for (const auto& x : a) out.push_back(finite_number(x, what));
  return out;
}

}  // namespace

Json to_json(ExtReal x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

ExtReal ext_real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
    throw ValidationError("unknown number sentinel \"" + s + "\"");
  }
  return finite_number(j, "extended real");
}

Json to_json(const ExtInterval& a) { return Json::array({to_json(a.lower()), to_json(a.upper())}); }

ExtInterval interval_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return ExtInterval(ext_real_from_json(j[0]), ext_real_from_json(j[1]));
  if (j.is_number() || j.is_string()) return ExtInterval(ext_real_from_json(j));
  throw ValidationError("interval must be [lower, upper] or a single number");
}

Json to_json(const PieceExpr& e) {
  Json j;
  switch (e.kind()) {
    case ExprKind::constant:
      j["kind"] = "const";
      j["value"] = to_json(e.as<ConstExpr>().value);
      break;
    case ExprKind::affine:
      j["kind"] = "affine";
      j["slope"] = e.as<AffineExpr>().slope;
      j["intercept"] = e.as<AffineExpr>().intercept;
      break;
    case ExprKind::power:
      j["kind"] = "powint";
      j["exponent"] = e.as<PowerExpr>().exponent;
      j["coeff"] = e.as<PowerExpr>().coeff;
      break;
    case ExprKind::sigmoid:
      j["kind"] = "sigmoid";
      j["rate"] = e.as<SigmoidExpr>().rate;
      j["scale"] = e.as<SigmoidExpr>().scale;
      j["offset"] = e.as<SigmoidExpr>().offset;
      break;
  }
  return j;
}

PieceExpr expr_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ValidationError("expression kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "const") return PieceExpr::constant(ext_real_from_json(field(j, "value")));
  if (k == "affine") {
    return PieceExpr::affine(finite_number(field(j, "slope"), "slope"),
                             finite_number(field(j, "intercept"), "intercept"));
  }
  if (k == "powint") {
    const Json& e = field(j, "exponent");
    if (!e.is_number_integer()) throw ValidationError("powint exponent must be an integer");
    return PieceExpr::power(e.get<int>(), optional_number(j, "coeff", 1.0));
  }
  if (k == "sigmoid") {
    return PieceExpr::sigmoid(finite_number(field(j, "rate"), "rate"), optional_number(j, "scale", 1.0),
                              optional_number(j, "offset", 0.0));
  }
  throw ValidationError("unknown expression kind \"" + k + "\"");
}

Json to_json(const PiecewiseIntervalFn& f) {
  Json j;
  j["domain"] = domain_to_json(f.domain());
  j["breakpoints"] = Json::array();
  for (double b : f.breakpoints()) j["breakpoints"].push_back(b);
  j["pieces"] = Json::array();
  for (const auto& p : f.pieces()) j["pieces"].push_back(Json{{"lower", to_json(p.lower)}, {"upper", to_json(p.upper)}});
  j["breakpoint_values"] = Json::array();
  for (const auto& v : f.values()) j["breakpoint_values"].push_back(to_json(v));
  return j;
}

PiecewiseIntervalFn function_from_json(const Json& j) {
  const Domain domain = domain_from_json(field(j, "domain"));
  auto bps = points_from_json(array_field(j, "breakpoints"), "breakpoint");
  std::vector<Piece> pieces;
  for (const auto& p : array_field(j, "pieces")) {
    pieces.push_back(Piece{expr_from_json(field(p, "lower")), expr_from_json(field(p, "upper"))});
  }
  std::vector<ExtInterval> values;
  for (const auto& v : array_field(j, "breakpoint_values")) values.push_back(interval_from_json(v));
  return PiecewiseIntervalFn(domain, std::move(bps), std::move(pieces), std::move(values));
}

Json to_json(const CndFunction& u) {
  Json j;
  j["domain"] = domain_to_json(u.domain());
  j["gamma"] = Json::array();
  for (double g : u.gamma()) j["gamma"].push_back(g);
  j["pieces"] = Json::array();
  for (const auto& e : u.pieces()) j["pieces"].push_back(to_json(e));
  return j;
}

CndFunction cnd_from_json(const Json& j) {
  const Domain domain = domain_from_json(field(j, "domain"));
  auto gamma = points_from_json(array_field(j, "gamma"), "exception point");
  std::vector<PieceExpr> pieces;
  for (const auto& e : array_field(j, "pieces")) pieces.push_back(expr_from_json(e));
  return CndFunction(domain, std::move(gamma), std::move(pieces));
}

Json to_json(const ContinuityReport& c, const FinitenessReport& f) {
  Json j;
  j["isS"] = c.isS;
  j["isD"] = c.isD;
  j["isH"] = c.isH;
  j["isContinuousInterval"] = c.isContinuousInterval;
  j["approximate"] = c.approximate;
  j["witnesses"] = Json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back(Json{{"point", w.point}, {"identity", w.identity}});
  Json fin;
  fin["isFinite"] = f.isFinite;
  fin["isNearlyFinite"] = f.isNearlyFinite;
  fin["isBounded"] = f.isBounded;
  fin["gammaPoints"] = Json::array();
  for (double x : f.gammaPoints) fin["gammaPoints"].push_back(x);
  fin["gammaPieces"] = Json::array();
  for (const auto& [l, r] : f.gammaPieces) fin["gammaPieces"].push_back(Json::array({to_json(l), to_json(r)}));
  j["finiteness"] = fin;
  return j;
}

Json to_json(const CrosscheckReport& r) {
  Json j;
  j["max_deviation"] = to_json(ExtReal(r.max_deviation));
  j["lipschitz"] = r.lipschitz;
  j["bound"] = r.bound;
  j["nodes_compared"] = r.nodes_compared;
  j["within_bound"] = r.within_bound;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_plot_csv(std::ostream& os, const PiecewiseIntervalFn& f, Window window, std::size_t n) {
  os << "x,lower,upper\n";
  for (std::size_t k = 0; k < n; ++k) {
    const double x = n == 1 ? window.a
                            : window.a + (static_cast<double>(k) * (window.b - window.a)) / static_cast<double>(n - 1);
    const ExtInterval v = f.eval(x);
    os << ExtReal(x) << ',' << v.lower() << ',' << v.upper() << '\n';
  }
}

void write_breakpoint_csv(std::ostream& os, const PiecewiseIntervalFn& f, Window window) {
  os << "x,lower,upper\n";
  for (std::size_t k = 0; k < f.breakpoints().size(); ++k) {
    const double b = f.breakpoints()[k];
    if (b < window.a || b > window.b) continue;
    os << ExtReal(b) << ',' << f.values()[k].lower() << ',' << f.values()[k].upper() << '\n';
  }
}

void write_crosscheck_csv(std::ostream& os, const CrosscheckReport& r) {
  os << "x,exact_lower,exact_upper,grid_lower,grid_upper,deviation\n";
  for (const auto& n : r.nodes) {
    os << ExtReal(n.x) << ',' << n.exact.lower() << ',' << n.exact.upper() << ',' << n.grid.lower() << ','
       << n.grid.upper() << ',' << ExtReal(n.deviation) << '\n';
  }
}

}  // namespace ifc::io
