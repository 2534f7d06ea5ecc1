#include "hjrelax/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hjrelax {

namespace {

// SAX handler that builds a DOM but stores non-integer number literals as
// their raw source strings, so "0.1" can later be converted exactly.
class ExactNumberSax {
 public:
  using json = nlohmann::json;

  bool null() { return emplace(nullptr); }
  bool boolean(bool v) { return emplace(v); }
  bool number_integer(json::number_integer_t v) { return emplace(v); }
  bool number_unsigned(json::number_unsigned_t v) { return emplace(v); }
  bool number_float(json::number_float_t, const std::string& raw) { return emplace(raw); }
  bool string(std::string& v) { return emplace(v); }
  bool binary(json::binary_t& v) { return emplace(v); }

  bool start_object(std::size_t) {
    stack_.push_back(json::object());
    return true;
  }
  bool key(std::string& k) {
    keys_.push_back(k);
    return true;
  }
  bool end_object() { return close(); }
  bool start_array(std::size_t) {
    stack_.push_back(json::array());
    return true;
  }
  bool end_array() { return close(); }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    throw ParseError("JSON parse error at byte " + std::to_string(position) + ": " + ex.what());
  }

  json result() const { return root_; }

 private:
  template <typename T>
  bool emplace(T&& v) {
    json j(std::forward<T>(v));
    attach(std::move(j));
    return true;
  }
  void attach(json&& j) {
    if (stack_.empty()) {
      root_ = std::move(j);
    } else if (stack_.back().is_array()) {
      stack_.back().push_back(std::move(j));
    } else {
      stack_.back()[keys_.back()] = std::move(j);
      keys_.pop_back();
    }
  }
  bool close() {
    json done = std::move(stack_.back());
    stack_.pop_back();
    attach(std::move(done));
    return true;
  }

  std::vector<json> stack_;
  std::vector<std::string> keys_;
  json root_;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json parse_json_exact(const std::string& text) {
  ExactNumberSax sax;
  nlohmann::json::sax_parse(text, &sax);
  return sax.result();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational::parse(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_float()) return Rational::from_double(j.get<double>());
  throw ParseError("expected a rational (integer, decimal, or \"n/d\"), got: " + j.dump());
}

PLFunction pl_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("slope_left") ||
      !j.contains("slope_right"))
    throw ParseError("function needs breakpoints, slope_left, slope_right");
  std::vector<PLFunction::Point> pts;
  for (const auto& bp : j.at("breakpoints")) {
    if (!bp.is_array() || bp.size() != 2) throw ParseError("breakpoint must be [x, y]");
    pts.push_back({rational_from_json(bp[0]), rational_from_json(bp[1])});
  }
  try {
    return PLFunction(std::move(pts), rational_from_json(j.at("slope_left")),
                      rational_from_json(j.at("slope_right")));
  } catch (const InvalidInputs& e) {
    throw ValidationError(e.what());
  }
}

nlohmann::json pl_to_json(const PLFunction& f) {
  nlohmann::json j;
  j["breakpoints"] = nlohmann::json::array();
  for (const auto& pt : f.breakpoints()) j["breakpoints"].push_back({pt.x.str(), pt.y.str()});
  j["slope_left"] = f.slope_left().str();
  j["slope_right"] = f.slope_right().str();
  return j;
}

ProblemSpec parse_spec(const std::string& text) {
  nlohmann::json j = parse_json_exact(text);
  if (!j.is_object()) throw ParseError("problem document must be a JSON object");
  ProblemSpec spec;

  if (j.contains("hamiltonian")) {
    spec.hamiltonian = pl_from_json(j.at("hamiltonian"));
    if (!spec.hamiltonian->is_coercive())
      throw ValidationError("hamiltonian must be coercive (slope_left < 0 < slope_right)");
  }
  if (j.contains("boundary")) {
    const auto& b = j.at("boundary");
    std::string type = b.value("type", "");
    if (type == "dynamic") {
      PLFunction f0 = pl_from_json(b.at("f0"));
      if (!f0.is_nonincreasing()) throw ValidationError("boundary function must be non-increasing");
      spec.boundary = DynamicBC{std::move(f0)};
    } else if (type == "neumann") {
      spec.boundary = NeumannBC{rational_from_json(b.at("h"))};
    } else if (type == "dirichlet") {
      spec.boundary = DirichletBC{rational_from_json(b.at("g")), b.value("relaxed", true)};
    } else {
      throw ParseError("boundary.type must be dynamic, neumann, or dirichlet");
    }
  }
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    SolverBlock block;
    block.cfg.L = rational_from_json(s.at("L"));
    block.cfg.dx = rational_from_json(s.at("dx"));
    block.cfg.cfl = s.contains("cfl") ? rational_from_json(s.at("cfl")) : Rational(9, 10);
    block.cfg.T = rational_from_json(s.at("T"));
    if (s.contains("u0")) {
      const auto& u = s.at("u0");
      std::string kind = u.value("type", "linear");
      if (kind == "linear") {
        block.u0.kind = U0Spec::Kind::Linear;
        block.u0.gradient = rational_from_json(u.at("gradient"));
      } else if (kind == "constant") {
        block.u0.kind = U0Spec::Kind::Constant;
        block.u0.value = rational_from_json(u.at("value"));
      } else if (kind == "nodes") {
        block.u0.kind = U0Spec::Kind::Nodes;
        for (const auto& v : u.at("values")) block.u0.nodes.push_back(rational_from_json(v).to_double());
      } else {
        throw ParseError("u0.type must be linear, constant, or nodes");
      }
    }
    spec.solver = std::move(block);
  }
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

std::vector<double> U0Spec::materialize(const GridConfig& cfg) const {
  Rational cells = cfg.L / cfg.dx;
  if (cells.denominator() != 1 || cells.sign() <= 0)
    throw ValidationError("L/dx must be a positive integer");
  std::size_t n = static_cast<std::size_t>(cells.numerator().get_ui()) + 1;
  std::vector<double> out(n);
  switch (kind) {
    case Kind::Linear:
      for (std::size_t j = 0; j < n; ++j)
        out[j] = (gradient * cfg.dx * Rational(static_cast<long>(j))).to_double();
      break;
    case Kind::Constant:
      for (auto& v : out) v = value.to_double();
      break;
    case Kind::Nodes:
      if (nodes.size() != n) throw ValidationError("u0.values length must equal L/dx + 1");
      out = nodes;
      break;
  }
  return out;
}

std::string function_csv(const PLFunction& f) {
  std::ostringstream os;
  os << "# slope_left=" << f.slope_left() << "\n";
  os << "x,y,slope_after\n";
  const auto& pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational after = (i + 1 < pts.size()) ? f.segment_slope(i) : f.slope_right();
    os << pts[i].x << "," << pts[i].y << "," << after << "\n";
  }
  return os.str();
}

std::string solution_csv(const GridSolution& sol) {
  std::ostringstream os;
  os << "t,x,u\n";
  for (std::size_t n = 0; n < sol.frames.size(); ++n)
    for (std::size_t j = 0; j < sol.frames[n].size(); ++j)
      os << fmt_double(sol.times[n]) << "," << fmt_double(sol.x(j)) << ","
         << fmt_double(sol.frames[n][j]) << "\n";
  return os.str();
}

std::string refine_csv(const std::vector<Rational>& dxs, const std::vector<double>& diffs) {
  std::ostringstream os;
  os << "dx,sup_diff\n";
  for (std::size_t i = 0; i < dxs.size(); ++i)
    os << dxs[i] << "," << fmt_double(diffs[i]) << "\n";
  return os.str();
}

std::string charpoints_csv(const std::vector<CharPoint>& pts) {
  std::ostringstream os;
  os << "p,sign\n";
  for (const auto& c : pts)
    os << c.location << "," << (c.sign == PointSign::Positive ? "positive" : "negative") << "\n";
  return os.str();
}

std::string limiters_csv(const std::vector<LimiterPoint>& pts) {
  std::ostringstream os;
  os << "p,sign,lo,hi\n";
  for (const auto& l : pts)
    os << l.p << "," << (l.sign == PointSign::Positive ? "positive" : "negative") << ","
       << l.interval.lo.str() << "," << l.interval.hi.str() << "\n";
  return os.str();
}

std::string germ_csv(const Germ& g) {
  std::ostringstream os;
  os << "lo,hi\n";
  for (const auto& c : g.components) os << c.lo.str() << "," << c.hi.str() << "\n";
  return os.str();
}

std::string corpus_report_json(const CorpusReport& report) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["cases"] = report.cases;
  j["wall_seconds"] = report.wall_seconds;
  j["identities"] = nlohmann::json::object();
  for (const auto& [name, passes] : report.pass_counts) j["identities"][name] = passes;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json jf;
    jf["index"] = f.index;
    jf["identity"] = f.identity;
    jf["detail"] = f.detail;
    jf["H"] = f.h_repr;
    jf["F0"] = f.f0_repr;
    j["failures"].push_back(jf);
  }
  return j.dump(2) + "\n";
}

namespace {

struct PlotWindow {
  double x0, x1, y0, y1;
};

void polyline(std::ostringstream& os, const PLFunction& f, const PlotWindow& w,
              const std::string& style) {
  // Sample at window ends and at every breakpoint inside.
  std::vector<double> xs = {w.x0};
  for (const auto& pt : f.breakpoints()) {
    double x = pt.x.to_double();
    if (x > w.x0 && x < w.x1) xs.push_back(x);
  }
  xs.push_back(w.x1);
  auto tx = [&](double x) { return 50.0 + (x - w.x0) / (w.x1 - w.x0) * 540.0; };
  auto ty = [&](double y) { return 430.0 - (y - w.y0) / (w.y1 - w.y0) * 380.0; };
  os << "  <polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << " ";
    os << fmt_double(tx(xs[i])) << "," << fmt_double(ty(f.eval_double(xs[i])));
  }
  os << "\"/>\n";
}

}  // namespace

std::string plot_svg(const PLFunction& H, const PLFunction* F0, const PLFunction* relaxed) {
  std::vector<const PLFunction*> fs = {&H};
  if (F0) fs.push_back(F0);
  if (relaxed) fs.push_back(relaxed);

  double x0 = 0, x1 = 0;
  bool first = true;
  for (const auto* f : fs)
    for (const auto& pt : f->breakpoints()) {
      double x = pt.x.to_double();
      x0 = first ? x : std::min(x0, x);
      x1 = first ? x : std::max(x1, x);
      first = false;
    }
  x0 -= 2.0;
  x1 += 2.0;
  double y0 = 0, y1 = 0;
  first = true;
  for (const auto* f : fs) {
    std::vector<double> xs = {x0, x1};
    for (const auto& pt : f->breakpoints()) xs.push_back(pt.x.to_double());
    for (double x : xs) {
      double y = f->eval_double(x);
      y0 = first ? y : std::min(y0, y);
      y1 = first ? y : std::max(y1, y);
      first = false;
    }
  }
  if (y1 - y0 < 1e-9) {
    y0 -= 1.0;
    y1 += 1.0;
  } else {
    double pad = 0.08 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
  }
  PlotWindow w{x0, x1, y0, y1};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
        "viewBox=\"0 0 640 480\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  // Axes through the origin when visible.
  auto tx = [&](double x) { return 50.0 + (x - w.x0) / (w.x1 - w.x0) * 540.0; };
  auto ty = [&](double y) { return 430.0 - (y - w.y0) / (w.y1 - w.y0) * 380.0; };
  if (w.x0 < 0 && w.x1 > 0)
    os << "  <line x1=\"" << fmt_double(tx(0)) << "\" y1=\"50\" x2=\"" << fmt_double(tx(0))
       << "\" y2=\"430\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  if (w.y0 < 0 && w.y1 > 0)
    os << "  <line x1=\"50\" y1=\"" << fmt_double(ty(0)) << "\" x2=\"590\" y2=\""
       << fmt_double(ty(0)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  polyline(os, H, w, "stroke=\"black\" stroke-width=\"2\"");
  if (F0) polyline(os, *F0, w, "stroke=\"#555555\" stroke-width=\"2\" stroke-dasharray=\"8,5\"");
  if (relaxed) polyline(os, *relaxed, w, "stroke=\"#cc0000\" stroke-width=\"3\"");
  os << "</svg>\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp + " for writing");
    os << content;
    if (!os.good()) throw IoError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw IoError("cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace hjrelax
