#include "cli_commands.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "inconic/area.hpp"
#include "inconic/batch.hpp"
#include "inconic/inscribed.hpp"
#include "inconic/pencil.hpp"
#include "json_output.hpp"
#include "svg_render.hpp"

namespace inconic::cli {

namespace {

using nlohmann::json;

/// Failure that maps straight to an exit code.
struct Exit {
  ExitCode code;
  std::string message;
};

struct InputOptions {
  std::string vertices;
  std::string input;
};

struct CenterOptions {
  std::string center;
  double u = 0.0;
  CLI::Option* center_opt = nullptr;
  CLI::Option* u_opt = nullptr;

  bool given() const { return center_opt->count() > 0 || u_opt->count() > 0; }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  auto* v = cmd->add_option("--vertices", in.vertices, "\"x0,y0 x1,y1 x2,y2 x3,y3\"");
  auto* f = cmd->add_option("--input", in.input, "JSON file {\"vertices\": [[x,y],...]}");
  v->excludes(f);
}

void add_center(CLI::App* cmd, CenterOptions& c) {
  c.center_opt = cmd->add_option("--center", c.center, "center as h,k");
  c.u_opt = cmd->add_option("--u", c.u, "locus parameter in (0,1)");
  c.center_opt->excludes(c.u_opt);
}

Point parse_pair(const std::string& text, ExitCode on_error) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream is(s);
  is.imbue(std::locale::classic());
  Point p;
  std::string rest;
  if (!(is >> p.x >> p.y) || (is >> rest)) {
    throw Exit{on_error, "cannot parse coordinate pair '" + text + "'"};
  }
  return p;
}

std::array<Point, 4> read_vertices(const InputOptions& in) {
  std::array<Point, 4> v;
  if (!in.vertices.empty()) {
    std::istringstream is(in.vertices);
    std::string token;
    std::size_t n = 0;
    while (is >> token) {
      if (n == 4) throw Exit{kInvalidQuad, "expected exactly four vertices"};
      v[n++] = parse_pair(token, kInvalidQuad);
    }
    if (n != 4) throw Exit{kInvalidQuad, "expected exactly four vertices"};
    return v;
  }
  if (in.input.empty()) throw Exit{kUsage, "one of --vertices or --input is required"};

  std::ifstream file(in.input);
  if (!file) throw Exit{kIo, "cannot open " + in.input};
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw Exit{kInvalidQuad, std::string("malformed JSON: ") + e.what()};
  }
  const auto it = doc.find("vertices");
  if (!doc.is_object() || it == doc.end() || !it->is_array() || it->size() != 4) {
    throw Exit{kInvalidQuad, "input needs \"vertices\": four [x, y] pairs"};
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const json& p = (*it)[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Exit{kInvalidQuad, "vertex " + std::to_string(i) + " is not an [x, y] pair"};
    }
    v[i] = {p[0].get<double>(), p[1].get<double>()};
  }
  return v;
}

ConvexQuad load_quad(const InputOptions& in, const Tolerances& tol) {
  const auto v = read_vertices(in);
  return validate_quad(std::span<const Point, 4>(v), tol);
}

Point resolve_center(const ConvexQuad& q, const CenterOptions& c) {
  if (c.center_opt->count() > 0) return parse_pair(c.center, kUsage);
  if (q.kind() == QuadKind::Parallelogram) {
    throw Error(ErrorCode::ParallelogramUnsupported, "locus is a single point");
  }
  return locus(q).at(c.u);
}

void write_json(std::ostream& out, const json& j) { out << dump(j); }

// ------------------------------------------------------------------ commands

int cmd_inspect(const ConvexQuad& q, const Tolerances& tol, std::ostream& out) {
  const LocusSegment z = locus(q);
  json j;
  j["kind"] = to_string(q.kind());
  auto verts = json::array();
  for (const Point& p : q.vertices()) verts.push_back(to_json(p));
  j["vertices"] = verts;
  j["M1"] = to_json(z.m1);
  j["M2"] = to_json(z.m2);
  j["locus_param_range"] = json::array({0.0, 1.0});
  if (z.degenerate) {
    j["chord_x"] = nullptr;
    j["normal_form"] = nullptr;
  } else {
    const ChordX c = chord_x(q);
    j["chord_x"] = {{"start", to_json(c.p_start)},
                    {"end", to_json(c.p_end)},
                    {"u_range", json::array({tidy(c.u_start), tidy(c.u_end)})}};
    const NormalForm nf = normalize(q, tol);
    j["normal_form"] = {{"s", tidy(nf.s)}, {"t", tidy(nf.t)}, {"labeling", nf.labeling}};
  }
  write_json(out, j);
  return kOk;
}

int cmd_inscribe(const ConvexQuad& q, const CenterOptions& c, const Tolerances& tol,
                 std::ostream& out) {
  if (!c.given()) throw Exit{kUsage, "inscribe needs --center or --u"};
  const InscribedResult r = c.u_opt->count() > 0 ? inscribe_at_param(q, c.u, tol)
                                                 : inscribe_at_center(q, resolve_center(q, c), tol);
  write_json(out, ellipse_output(r));
  return kOk;
}

int cmd_maxarea(const ConvexQuad& q, const Tolerances& tol, std::ostream& out) {
  const MaxAreaResult m = max_area(q, tol);
  const InscribedResult r = inscribe_at_center(q, m.center, tol);
  json j;
  j["center"] = to_json(m.center);
  j["area"] = tidy(m.area);
  j["h0"] = tidy(m.h0);
  j["ellipse"] = ellipse_output(r);
  write_json(out, j);
  return kOk;
}

int cmd_verify(const ConvexQuad& q, const CenterOptions& c, bool allow_hyperbola,
               const Tolerances& tol, std::ostream& out, std::ostream& err) {
  if (!c.given()) throw Exit{kUsage, "verify needs --center or --u"};
  if (q.kind() == QuadKind::Parallelogram) {
    throw Error(ErrorCode::ParallelogramUnsupported, "locus is a single point");
  }
  const Point center = resolve_center(q, c);
  double scale = 1.0;
  for (const Point& p : q.vertices()) scale = std::max({scale, 1.0 + std::abs(p.x), 1.0 + std::abs(p.y)});

  Conic conic = Conic::from_coefficients(1, 0, 1, 0, 0, -1);
  ConicKind kind = ConicKind::RealEllipse;
  json pencil_gap = nullptr;
  try {
    const InscribedResult r = inscribe_at_center(q, center, tol);
    conic = r.conic;
    if (q.kind() == QuadKind::Trapezium) {
      pencil_gap = sig15(conic_distance(conic, member_with_center(pencil_from_quad(q, tol), center, tol)));
    }
  } catch (const Error& e) {
    if (!allow_hyperbola || e.code() != ErrorCode::CenterOffLocus) throw;
    const TangentConic t = tangent_conic_at_center(q, center, tol);
    conic = t.conic;
    kind = t.kind;
  }

  json j;
  j["classification"] = to_string(kind);
  std::vector<std::string> failures;
  auto residuals = json::array();
  for (const Line& l : side_lines(q)) {
    const double res = tangency_residual(conic, l);
    residuals.push_back(sig15(res));
    if (!(res < tol.tangency)) failures.push_back("tangency_residual");
  }
  j["tangency_residuals"] = residuals;
  const double center_error = distance(conic_center(conic, tol), center);
  j["center_error"] = sig15(center_error);
  if (!(center_error <= tol.center * scale)) failures.push_back("center_error");
  j["marden_vs_pencil_distance"] = pencil_gap;
  if (pencil_gap.is_number() && !(pencil_gap.get<double>() < tol.tangency)) {
    failures.push_back("marden_vs_pencil_distance");
  }
  j["pass"] = failures.empty();
  write_json(out, j);
  if (!failures.empty()) {
    err << "verify failed: " << failures.front() << '\n';
    return kNumerical;
  }
  return kOk;
}

int cmd_sample(const ConvexQuad& q, std::size_t n, const Tolerances& tol, std::ostream& out) {
  auto j = json::array();
  for (const InscribedResult& r : sample_locus(q, n, Execution::Parallel, tol)) {
    j.push_back(ellipse_output(r));
  }
  write_json(out, j);
  return kOk;
}

struct RenderOptions {
  std::string out;
  bool maxarea = false;
  std::size_t n = 0;
  CLI::Option* n_opt = nullptr;
};

int cmd_render(const ConvexQuad& q, const CenterOptions& c, const RenderOptions& r,
               const Tolerances& tol) {
  SvgScene scene;
  scene.quad = q.vertices();
  const LocusSegment z = locus(q);
  if (!z.degenerate) {
    scene.locus = std::make_pair(z.m1, z.m2);
    const ChordX chord = chord_x(q);
    scene.chord = std::make_pair(chord.p_start, chord.p_end);
  }

  std::vector<InscribedResult> picks;
  if (r.maxarea) {
    picks.push_back(inscribe_at_center(q, max_area(q, tol).center, tol));
  } else if (r.n_opt->count() > 0) {
    if (r.n < 1) throw Exit{kUsage, "--n must be at least 1"};
    picks = sample_locus(q, r.n, Execution::Parallel, tol);
  } else if (c.u_opt->count() > 0) {
    picks.push_back(inscribe_at_param(q, c.u, tol));
  } else if (c.center_opt->count() > 0) {
    picks.push_back(inscribe_at_center(q, resolve_center(q, c), tol));
  }
  for (const InscribedResult& p : picks) {
    scene.ellipses.push_back(p.ellipse);
    for (const HomPoint& h : p.tangencies) {
      if (!h.at_infinity()) scene.contacts.push_back(h.affine());
    }
  }

  std::ofstream file(r.out, std::ios::binary);
  if (!file) throw Exit{kIo, "cannot write " + r.out};
  file << render_svg(scene);
  if (!file.flush()) throw Exit{kIo, "write failed for " + r.out};
  return kOk;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotConvex:
    case ErrorCode::DegenerateQuad:
      return kInvalidQuad;
    case ErrorCode::ParallelogramUnsupported:
      return kParallelogram;
    case ErrorCode::CenterOffLocus:
    case ErrorCode::CenterOffChord:
    case ErrorCode::DegenerateAtMidpoint:
    case ErrorCode::CenterOffCentersLine:
      return kOffLocus;
    default:
      return kNumerical;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_tol) {
  CLI::App app{"Inscribed ellipses of convex quadrilaterals", "inconic"};
  app.require_subcommand(1);
  std::string tol_text;
  app.add_option("--tol", tol_text, "tolerance overrides, e.g. tan=1e-8,class=1e-10");
  app.fallthrough();

  InputOptions in;
  CenterOptions inscribe_center, verify_center, render_center;
  bool allow_hyperbola = false;
  std::size_t sample_n = 0;
  RenderOptions render;

  auto* inspect = app.add_subcommand("inspect", "classify the quad, report locus and chord");
  add_input(inspect, in);
  auto* inscribe = app.add_subcommand("inscribe", "inscribed ellipse with a given center");
  add_input(inscribe, in);
  add_center(inscribe, inscribe_center);
  auto* maxarea = app.add_subcommand("maxarea", "inscribed ellipse of maximal area");
  add_input(maxarea, in);
  auto* verify = app.add_subcommand("verify", "check tangency, center and the pencil oracle");
  add_input(verify, in);
  add_center(verify, verify_center);
  verify->add_flag("--allow-hyperbola", allow_hyperbola, "accept centers beyond the locus");
  auto* sample = app.add_subcommand("sample", "N ellipses at u = i/(N+1)");
  add_input(sample, in);
  sample->add_option("--n", sample_n, "number of samples")->required();
  auto* rend = app.add_subcommand("render", "write an SVG drawing");
  add_input(rend, in);
  add_center(rend, render_center);
  rend->add_option("--out", render.out, "output SVG file")->required();
  auto* max_flag = rend->add_flag("--maxarea", render.maxarea, "draw the max-area ellipse");
  render.n_opt = rend->add_option("--n", render.n, "draw N sampled ellipses");
  max_flag->excludes(render.n_opt)->excludes(render_center.center_opt)->excludes(render_center.u_opt);
  render.n_opt->excludes(render_center.center_opt)->excludes(render_center.u_opt);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  Tolerances tol;
  try {
    if (env_tol) tol = parse_tolerances(*env_tol, tol);
    if (!tol_text.empty()) tol = parse_tolerances(tol_text, tol);
  } catch (const Error& e) {
    err << "inconic: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*sample && sample_n < 1) throw Exit{kUsage, "--n must be at least 1"};

    const ConvexQuad q = load_quad(in, tol);
    if (*inspect) return cmd_inspect(q, tol, out);
    if (*inscribe) return cmd_inscribe(q, inscribe_center, tol, out);
    if (*maxarea) return cmd_maxarea(q, tol, out);
    if (*verify) return cmd_verify(q, verify_center, allow_hyperbola, tol, out, err);
    if (*sample) return cmd_sample(q, sample_n, tol, out);
    if (*rend) return cmd_render(q, render_center, render, tol);
    return kUsage;
  } catch (const Exit& e) {
    err << "inconic: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "inconic: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace inconic::cli
