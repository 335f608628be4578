#include "fcech/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "fcech/backends.hpp"
#include "fcech/errors.hpp"

namespace fcech::cli {

namespace {

// ---------------------------------------------------------------------------
// Schema walking with dotted-path diagnostics.

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

std::string item(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

std::string key_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const Json& member(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, std::string("expected an object, got ") + j.type_name());
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing required field '" + key + "'");
  return *it;
}

const Json* opt_member(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, std::string("expected an object, got ") + j.type_name());
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

void expect_keys(const Json& j, const std::string& path,
                 std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, std::string("expected an object, got ") + j.type_name());
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) fail(key_path(path, key), "unknown field");
  }
}

long require_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    if (j.is_number_float()) fail(path, "decimals are not accepted; values must be exact integers");
    fail(path, std::string("expected an integer, got ") + j.type_name());
  }
  return j.get<long>();
}

bool require_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, std::string("expected a boolean, got ") + j.type_name());
  return j.get<bool>();
}

std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, std::string("expected a string, got ") + j.type_name());
  return j.get<std::string>();
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, std::string("expected an array, got ") + j.type_name());
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<int>(require_int(j[i], item(path, i))));
  return out;
}

// ---------------------------------------------------------------------------
// Exact geometry: rationals as integers or [numerator, denominator] pairs.

Rat parse_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(require_int(j, path));
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "a rational is [numerator, denominator]");
    long num = require_int(j[0], item(path, 0));
    long den = require_int(j[1], item(path, 1));
    if (den == 0) fail(path, "zero denominator");
    return make_rat(num, den);
  }
  if (j.is_number_float()) fail(path, "decimals are not accepted; use [numerator, denominator]");
  fail(path, std::string("expected an integer or [numerator, denominator], got ") + j.type_name());
}

struct Ends {
  Rat lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

Ends parse_ends(const Json& j, const std::string& path) {
  expect_keys(j, path, {"lo", "hi", "lo_closed", "hi_closed"});
  Ends e;
  e.lo = parse_rat(member(j, path, "lo"), key_path(path, "lo"));
  e.hi = parse_rat(member(j, path, "hi"), key_path(path, "hi"));
  if (const Json* c = opt_member(j, path, "lo_closed"))
    e.lo_closed = require_bool(*c, key_path(path, "lo_closed"));
  if (const Json* c = opt_member(j, path, "hi_closed"))
    e.hi_closed = require_bool(*c, key_path(path, "hi_closed"));
  return e;
}

Interval parse_interval(const Json& j, const std::string& path) {
  Ends e = parse_ends(j, path);
  auto iv = Interval::make(e.lo, e.lo_closed, e.hi, e.hi_closed);
  if (!iv) fail(path, "empty interval");
  return *iv;
}

// A region is an array of boxes; a box is an array of per-axis intervals.
Region parse_region(const Json& j, const std::string& path, int dim_hint) {
  require_array(j, path);
  Region r;
  r.dim = dim_hint > 0 ? dim_hint : 1;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const std::string bpath = item(path, b);
    require_array(j[b], bpath);
    if (j[b].empty()) fail(bpath, "a box needs at least one interval side");
    Box box;
    for (std::size_t s = 0; s < j[b].size(); ++s)
      box.sides.push_back(parse_interval(j[b][s], item(bpath, s)));
    if (b == 0 && dim_hint <= 0) r.dim = static_cast<int>(box.sides.size());
    if (static_cast<int>(box.sides.size()) != r.dim)
      fail(bpath, "expected " + std::to_string(r.dim) + " interval sides");
    r.boxes.push_back(std::move(box));
  }
  return r;
}

// A circle subset is an array of arcs, each with lo <= hi taken mod 1.
CircleSet parse_circle_set(const Json& j, const std::string& path) {
  require_array(j, path);
  CircleSet s = CircleSet::empty();
  for (std::size_t a = 0; a < j.size(); ++a) {
    Ends e = parse_ends(j[a], item(path, a));
    if (e.lo > e.hi) fail(item(path, a), "an arc needs lo <= hi (it wraps past 1 on its own)");
    s = s.unite(CircleSet::arc(e.lo, e.lo_closed, e.hi, e.hi_closed));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Space descriptions.

struct SpaceSpec {
  std::string kind;
  std::string label;
  bool compact = false;
  const Fixture* fix = nullptr;
  std::optional<StandardKind> standard;
  // Builds one cover stage from its JSON element list (explicit kinds only).
  std::function<Cover(const std::string&, const Json&, const std::string&)> make_cover;
};

StandardKind standard_kind(const std::string& name, const std::string& path) {
  if (name == "point") return StandardKind::point;
  if (name == "interval") return StandardKind::interval;
  if (name == "interval_pair") return StandardKind::interval_pair;
  if (name == "circle") return StandardKind::circle;
  fail(path, "unknown standard chain '" + name +
                 "' (expected point, interval, interval_pair, or circle)");
}

SpaceSpec parse_space(const Json& j, const std::string& path) {
  SpaceSpec spec;
  spec.kind = require_string(member(j, path, "kind"), key_path(path, "kind"));
  if (const Json* l = opt_member(j, path, "label"))
    spec.label = require_string(*l, key_path(path, "label"));

  if (spec.kind == "fixture") {
    expect_keys(j, path, {"kind", "label", "name"});
    std::string name = require_string(member(j, path, "name"), key_path(path, "name"));
    for (const Fixture& f : fixtures())
      if (f.name == name) spec.fix = &f;
    if (!spec.fix) fail(key_path(path, "name"), "unknown fixture '" + name + "'");
    spec.compact = spec.fix->compact;
    return spec;
  }

  if (spec.kind == "standard") {
    expect_keys(j, path, {"kind", "label", "name"});
    std::string name = require_string(member(j, path, "name"), key_path(path, "name"));
    spec.standard = standard_kind(name, key_path(path, "name"));
    spec.compact = true;
    return spec;
  }

  if (spec.kind == "finite") {
    expect_keys(j, path, {"kind", "label", "points", "sub", "sub_b"});
    int points = static_cast<int>(require_int(member(j, path, "points"), key_path(path, "points")));
    if (points < 0) fail(key_path(path, "points"), "point count must be nonnegative");
    std::vector<int> sub, sub_b;
    if (const Json* s = opt_member(j, path, "sub")) sub = int_list(*s, key_path(path, "sub"));
    if (const Json* s = opt_member(j, path, "sub_b")) sub_b = int_list(*s, key_path(path, "sub_b"));
    FiniteSpace space = FiniteSpace::make(points, std::move(sub), std::move(sub_b));
    if (spec.label.empty()) spec.label = "finite space";
    spec.compact = true;
    spec.make_cover = [space](const std::string& name, const Json& elements,
                              const std::string& epath) {
      require_array(elements, epath);
      std::vector<std::vector<int>> parts;
      for (std::size_t i = 0; i < elements.size(); ++i)
        parts.push_back(int_list(elements[i], item(epath, i)));
      return finite_cover(name, space, std::move(parts));
    };
    return spec;
  }

  if (spec.kind == "box") {
    expect_keys(j, path, {"kind", "label", "space", "sub", "sub_b"});
    Region whole = parse_region(member(j, path, "space"), key_path(path, "space"), 0);
    const Json* sub = opt_member(j, path, "sub");
    const Json* sub_b = opt_member(j, path, "sub_b");
    if (sub_b && !sub) fail(key_path(path, "sub_b"), "sub_b requires sub");
    BoxSpace space =
        sub_b ? BoxSpace::make(whole, parse_region(*sub, key_path(path, "sub"), whole.dim),
                               parse_region(*sub_b, key_path(path, "sub_b"), whole.dim))
        : sub ? BoxSpace::make(whole, parse_region(*sub, key_path(path, "sub"), whole.dim))
              : BoxSpace::whole(whole);
    if (spec.label.empty()) spec.label = "box space";
    spec.compact = space.compact();
    int dim = whole.dim;
    spec.make_cover = [space, dim](const std::string& name, const Json& elements,
                                   const std::string& epath) {
      require_array(elements, epath);
      std::vector<Region> parts;
      for (std::size_t i = 0; i < elements.size(); ++i)
        parts.push_back(parse_region(elements[i], item(epath, i), dim));
      return box_cover(name, space, std::move(parts));
    };
    return spec;
  }

  if (spec.kind == "circle") {
    expect_keys(j, path, {"kind", "label", "space", "sub", "sub_b"});
    CircleSet whole = parse_circle_set(member(j, path, "space"), key_path(path, "space"));
    const Json* sub = opt_member(j, path, "sub");
    const Json* sub_b = opt_member(j, path, "sub_b");
    if (sub_b && !sub) fail(key_path(path, "sub_b"), "sub_b requires sub");
    CircleSpace space =
        sub_b ? CircleSpace::make(whole, parse_circle_set(*sub, key_path(path, "sub")),
                                  parse_circle_set(*sub_b, key_path(path, "sub_b")))
        : sub ? CircleSpace::make(whole, parse_circle_set(*sub, key_path(path, "sub")))
              : CircleSpace::whole(whole);
    if (spec.label.empty()) spec.label = "circle space";
    spec.compact = space.compact();
    spec.make_cover = [space](const std::string& name, const Json& elements,
                              const std::string& epath) {
      require_array(elements, epath);
      std::vector<CircleSet> parts;
      for (std::size_t i = 0; i < elements.size(); ++i)
        parts.push_back(parse_circle_set(elements[i], item(epath, i)));
      return circle_cover(name, space, std::move(parts));
    };
    return spec;
  }

  fail(key_path(path, "kind"), "unknown space kind '" + spec.kind +
                                   "' (expected box, circle, finite, standard, or fixture)");
}

// ---------------------------------------------------------------------------
// Coefficients, options, requests.

FgAbGroup parse_group(const Json& j, const std::string& path) {
  expect_keys(j, path, {"free_rank", "factors"});
  int rank = 0;
  std::vector<Int> factors;
  if (const Json* r = opt_member(j, path, "free_rank")) {
    long v = require_int(*r, key_path(path, "free_rank"));
    if (v < 0) fail(key_path(path, "free_rank"), "rank must be nonnegative");
    rank = static_cast<int>(v);
  }
  if (const Json* f = opt_member(j, path, "factors")) {
    require_array(*f, key_path(path, "factors"));
    for (std::size_t i = 0; i < f->size(); ++i) {
      long v = require_int((*f)[i], item(key_path(path, "factors"), i));
      if (v < 0) fail(item(key_path(path, "factors"), i), "factors must be nonnegative");
      factors.push_back(Int(v));
    }
  }
  return FgAbGroup::from_parts(rank, std::move(factors));
}

std::map<int, FgAbGroup> parse_degree_table(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, std::string("expected an object, got ") + j.type_name());
  std::map<int, FgAbGroup> out;
  for (const auto& [key, value] : j.items()) {
    int degree;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(key_path(path, key), "degree keys must be nonnegative integers");
    }
    if (degree < 0) fail(key_path(path, key), "degree keys must be nonnegative integers");
    out.emplace(degree, parse_group(value, key_path(path, key)));
  }
  return out;
}

BetaExpectation parse_expectation(const Json& j, const std::string& path) {
  expect_keys(j, path, {"homology", "cohomology", "eta"});
  BetaExpectation e;
  if (const Json* h = opt_member(j, path, "homology"))
    e.homology = parse_degree_table(*h, key_path(path, "homology"));
  if (const Json* h = opt_member(j, path, "cohomology"))
    e.cohomology = parse_degree_table(*h, key_path(path, "cohomology"));
  if (const Json* v = opt_member(j, path, "eta"))
    e.eta_value = static_cast<int>(require_int(*v, key_path(path, "eta")));
  return e;
}

std::pair<int, int> parse_degree_pair(const Json& j, const std::string& path) {
  require_array(j, path);
  if (j.size() != 2) fail(path, "a degree range is [low, high]");
  int lo = static_cast<int>(require_int(j[0], item(path, 0)));
  int hi = static_cast<int>(require_int(j[1], item(path, 1)));
  if (lo < 0 || hi < lo) fail(path, "need 0 <= low <= high");
  return {lo, hi};
}

bool degree_indexed(const std::string& op) {
  return op == "homology" || op == "cohomology" || op == "pair_check";
}

// ---------------------------------------------------------------------------
// Report rendering.

Json group_json(const FgAbGroup& g) { return Json(g.to_string()); }

std::string degree_label(const std::string& kind, int degree) {
  return (kind == "H" ? "H_" : "H^") + std::to_string(degree);
}

void append_limit(const Job& job, const Request& req, Json& results, std::string& text,
                  bool homology) {
  for (int n = req.lo; n <= req.hi; ++n) {
    LimitReport r = homology ? functional_homology(job.system, job.coefficients, n, job.window)
                             : functional_cohomology(job.system, job.coefficients, n, job.window);
    Json entry;
    entry["op"] = homology ? "homology" : "cohomology";
    entry["degree"] = n;
    entry["group"] = group_json(r.limit);
    entry["stabilized"] = r.stabilized;
    Json stages = Json::array();
    for (const FgAbGroup& s : r.stages) stages.push_back(group_json(s));
    entry["stages"] = stages;
    results.push_back(entry);
    text += degree_label(homology ? "H" : "H^", n) + " = " + r.to_string() + "\n";
  }
}

void append_eta(const Job& job, Json& results, std::string& text) {
  EtaResult e = eta(job.system, job.coefficients, job.window);
  Json entry;
  entry["op"] = "eta";
  entry["value"] = e.value;
  entry["dimension_bound"] = e.dimension_bound;
  entry["stabilized"] = e.stabilized;
  entry["note"] = e.note;
  results.push_back(entry);
  text += "eta = " + std::to_string(e.value) + " (dimension bound " +
          std::to_string(e.dimension_bound) + (e.stabilized ? ", stabilized)" : ", not stabilized)") +
          "\n";
}

void append_pair_check(const Job& job, const Request& req, Json& results, std::string& text,
                       bool& pass) {
  PairSequenceVerdict v = pair_sequence_check(job.system, job.coefficients, req.lo, req.hi,
                                              job.window);
  Json entry;
  entry["op"] = "pair_check";
  entry["degrees"] = Json::array({req.lo, req.hi});
  entry["pass"] = v.pass;
  entry["homology_order_two"] = v.homology.order_two;
  entry["cohomology_exact"] = v.cohomology.exact;
  entry["all_stabilized"] = v.all_stabilized;
  Json failures = Json::array();
  for (const std::string& f : v.homology.failures) failures.push_back("homology: " + f);
  for (const std::string& f : v.cohomology.failures) failures.push_back("cohomology: " + f);
  entry["failures"] = failures;
  Json notes = Json::array();
  for (const std::string& n : v.notes) notes.push_back(n);
  entry["notes"] = notes;
  results.push_back(entry);
  text += "pair sequence degrees " + std::to_string(req.lo) + ".." + std::to_string(req.hi) +
          ": " + (v.pass ? "pass" : "FAIL") +
          (v.pass ? " (homology of order two, cohomology exact)" : "") + "\n";
  for (const auto& f : failures) text += "  " + f.get<std::string>() + "\n";
  if (!v.pass) pass = false;
}

void append_beta_check(const Job& job, const Request& req, Json& results, std::string& text,
                       bool& pass) {
  Json entry;
  entry["op"] = "beta_check";
  if (!job.system.compact) {
    entry["available"] = false;
    entry["note"] = "beta comparison unavailable: the system is not presented as compact";
    results.push_back(entry);
    text += "beta comparison unavailable (not compact)\n";
    return;
  }
  BetaExpectation expected =
      req.expected ? *req.expected : job.fixture->expected(job.coefficients);
  BetaVerdict v = compact_beta_check(job.system, job.coefficients, expected, job.window);
  entry["available"] = true;
  entry["pass"] = v.pass;
  Json rows = Json::array();
  for (const BetaRow& r : v.rows) {
    Json row;
    row["kind"] = r.kind;
    row["degree"] = r.degree;
    row["expected"] = group_json(r.expected);
    row["computed"] = group_json(r.computed);
    row["stabilized"] = r.stabilized;
    row["match"] = r.match;
    rows.push_back(row);
  }
  entry["rows"] = rows;
  Json notes = Json::array();
  for (const std::string& n : v.notes) notes.push_back(n);
  entry["notes"] = notes;
  results.push_back(entry);
  text += std::string("beta comparison: ") + (v.pass ? "pass" : "FAIL") + "\n";
  for (const BetaRow& r : v.rows) {
    text += "  " + degree_label(r.kind, r.degree) + ": expected " + r.expected.to_string() +
            ", computed " + r.computed.to_string() + (r.stabilized ? " (stabilized)" : "") +
            (r.match ? "" : "  <- mismatch") + "\n";
  }
  for (const std::string& n : v.notes) text += "  " + n + "\n";
  if (!v.pass) pass = false;
}

Json default_requests_echo(int lo, int hi) {
  Json reqs = Json::array();
  Json h;
  h["op"] = "homology";
  h["degrees"] = Json::array({lo, hi});
  reqs.push_back(h);
  Json c;
  c["op"] = "cohomology";
  c["degrees"] = Json::array({lo, hi});
  reqs.push_back(c);
  Json e;
  e["op"] = "eta";
  reqs.push_back(e);
  return reqs;
}

}  // namespace

Job parse_job(const Json& document, const std::string& label, const Overrides& o) {
  expect_keys(document, "", {"label", "space", "cover_chain", "coefficients", "requests",
                             "options"});
  Job job;
  job.label = label;
  if (const Json* l = opt_member(document, "", "label"))
    job.label = require_string(*l, "label");

  SpaceSpec space = parse_space(member(document, "", "space"), "space");

  // Options first: requests default to the option degree range.
  int window = 2;
  int lo = 0, hi = 2;
  if (const Json* opts = opt_member(document, "", "options")) {
    expect_keys(*opts, "options", {"window", "degrees"});
    if (const Json* w = opt_member(*opts, "options", "window")) {
      long v = require_int(*w, "options.window");
      if (v < 1) fail("options.window", "window must be at least 1");
      window = static_cast<int>(v);
    }
    if (const Json* d = opt_member(*opts, "options", "degrees"))
      std::tie(lo, hi) = parse_degree_pair(*d, "options.degrees");
  }
  if (o.window) window = *o.window;
  if (o.degrees) std::tie(lo, hi) = *o.degrees;
  job.window = window;

  // Coefficients (default Z).
  job.coefficients = FgAbGroup::free(1);
  if (const Json* g = opt_member(document, "", "coefficients"))
    job.coefficients = parse_group(*g, "coefficients");

  // Cover chain.
  const Json& chain = member(document, "", "cover_chain");
  int depth = space.fix ? space.fix->default_depth : 3;
  if (space.fix || space.standard) {
    expect_keys(chain, "cover_chain", {"depth"});
    if (const Json* d = opt_member(chain, "cover_chain", "depth")) {
      long v = require_int(*d, "cover_chain.depth");
      if (v < 1) fail("cover_chain.depth", "depth must be at least 1");
      depth = static_cast<int>(v);
    }
    if (o.depth) depth = *o.depth;
    job.system = space.fix ? space.fix->build(depth) : standard_chain(*space.standard, depth);
    job.fixture = space.fix;
  } else {
    expect_keys(chain, "cover_chain", {"covers", "projections"});
    if (o.depth) fail("cover_chain", "--depth applies only to fixture or standard chains");
    const Json& covers = require_array(member(chain, "cover_chain", "covers"),
                                       "cover_chain.covers");
    if (covers.empty()) fail("cover_chain.covers", "a chain needs at least one cover");
    std::vector<Cover> built;
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const std::string cpath = item("cover_chain.covers", i);
      expect_keys(covers[i], cpath, {"name", "elements"});
      std::string name = "stage" + std::to_string(i);
      if (const Json* n = opt_member(covers[i], cpath, "name"))
        name = require_string(*n, key_path(cpath, "name"));
      built.push_back(space.make_cover(name, member(covers[i], cpath, "elements"),
                                       key_path(cpath, "elements")));
    }
    std::vector<std::vector<int>> projections;
    if (const Json* p = opt_member(chain, "cover_chain", "projections")) {
      require_array(*p, "cover_chain.projections");
      for (std::size_t i = 0; i < p->size(); ++i)
        projections.push_back(int_list((*p)[i], item("cover_chain.projections", i)));
    }
    if (projections.size() + 1 != built.size())
      fail("cover_chain.projections", "a chain of " + std::to_string(built.size()) +
                                          " covers needs " + std::to_string(built.size() - 1) +
                                          " projections");
    job.system = make_system(space.label, space.compact, std::move(built), projections);
  }

  // Requests (default: homology + cohomology over the degree range, then eta).
  Json requests_echo = Json::array();
  if (const Json* reqs = opt_member(document, "", "requests")) {
    require_array(*reqs, "requests");
    for (std::size_t i = 0; i < reqs->size(); ++i) {
      const std::string rpath = item("requests", i);
      expect_keys((*reqs)[i], rpath, {"op", "degree", "degrees", "expected"});
      Request r;
      r.op = require_string(member((*reqs)[i], rpath, "op"), key_path(rpath, "op"));
      r.lo = lo;
      r.hi = hi;
      if (r.op != "homology" && r.op != "cohomology" && r.op != "eta" && r.op != "pair_check" &&
          r.op != "beta_check")
        fail(key_path(rpath, "op"),
             "unknown operation '" + r.op +
                 "' (expected homology, cohomology, eta, pair_check, or beta_check)");
      const Json* degree = opt_member((*reqs)[i], rpath, "degree");
      const Json* degrees = opt_member((*reqs)[i], rpath, "degrees");
      if ((degree || degrees) && !degree_indexed(r.op))
        fail(rpath, "'" + r.op + "' does not take degrees");
      if (degree && degrees) fail(rpath, "give either 'degree' or 'degrees', not both");
      if (degree) {
        long v = require_int(*degree, key_path(rpath, "degree"));
        if (v < 0) fail(key_path(rpath, "degree"), "degrees are nonnegative");
        r.lo = r.hi = static_cast<int>(v);
      }
      if (degrees) std::tie(r.lo, r.hi) = parse_degree_pair(*degrees, key_path(rpath, "degrees"));
      if (const Json* e = opt_member((*reqs)[i], rpath, "expected")) {
        if (r.op != "beta_check") fail(rpath, "'expected' belongs to beta_check requests");
        r.expected = parse_expectation(*e, key_path(rpath, "expected"));
      }
      if (r.op == "beta_check" && !r.expected && !space.fix)
        fail(rpath, "beta_check needs a fixture-backed space or an inline 'expected' table");
      job.requests.push_back(r);

      Json echo;
      echo["op"] = r.op;
      if (degree_indexed(r.op)) echo["degrees"] = Json::array({r.lo, r.hi});
      if (r.expected) echo["expected"] = (*reqs)[i].at("expected");
      requests_echo.push_back(echo);
    }
  } else {
    job.requests = {{"homology", lo, hi, std::nullopt},
                    {"cohomology", lo, hi, std::nullopt},
                    {"eta", 0, 0, std::nullopt}};
    requests_echo = default_requests_echo(lo, hi);
  }

  // Normalized echo for the machine report.
  job.echo["label"] = job.label;
  job.echo["space"] = document.at("space");
  if (space.fix || space.standard) {
    Json cc;
    cc["depth"] = depth;
    job.echo["cover_chain"] = cc;
  } else {
    job.echo["cover_chain"] = document.at("cover_chain");
  }
  Json g;
  g["free_rank"] = job.coefficients.free_rank();
  Json factors = Json::array();
  for (const Int& d : job.coefficients.invariant_factors()) factors.push_back(d.get_si());
  g["factors"] = factors;
  job.echo["coefficients"] = g;
  Json opts;
  opts["window"] = window;
  opts["degrees"] = Json::array({lo, hi});
  job.echo["options"] = opts;
  job.echo["requests"] = requests_echo;
  return job;
}

Job fixture_job(const std::string& name, const Overrides& o) {
  const Fixture* fix = nullptr;
  for (const Fixture& f : fixtures())
    if (f.name == name) fix = &f;
  if (!fix) {
    std::string names;
    for (const Fixture& f : fixtures()) names += (names.empty() ? "" : ", ") + f.name;
    throw ParseError("unknown fixture '" + name + "' (available: " + names + ")");
  }
  Json doc;
  doc["label"] = "fixture: " + name;
  Json space;
  space["kind"] = "fixture";
  space["name"] = name;
  doc["space"] = space;
  Json chain;
  chain["depth"] = o.depth ? *o.depth : fix->default_depth;
  doc["cover_chain"] = chain;
  int lo = o.degrees ? o.degrees->first : 0;
  int hi = o.degrees ? o.degrees->second : 2;
  Json reqs = default_requests_echo(lo, hi);
  Json pc;
  pc["op"] = "pair_check";
  pc["degrees"] = Json::array({lo, hi});
  reqs.push_back(pc);
  Json bc;
  bc["op"] = "beta_check";
  reqs.push_back(bc);
  doc["requests"] = reqs;
  Json opts;
  opts["window"] = o.window ? *o.window : 2;
  opts["degrees"] = Json::array({lo, hi});
  doc["options"] = opts;
  return parse_job(doc, "fixture: " + name, {});
}

Outcome run(const Job& job) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  SystemReport header = summarize(job.system);

  out.text = "system " + header.space + (header.compact ? " (compact)" : " (not compact)") + "\n";
  out.text += "coefficients: " + job.coefficients.to_string() + "\n";
  out.text += "window: " + std::to_string(job.window) + "\n";
  std::string stages;
  for (std::size_t i = 0; i < header.stage_sizes.size(); ++i) {
    if (i) stages += ", ";
    stages += std::to_string(header.stage_sizes[i]) + " elements/dim " +
              std::to_string(header.stage_dimensions[i]);
  }
  out.text += "stages: " + stages + "\n";

  out.machine["job"] = job.echo;
  out.machine["space"] = header.space;
  out.machine["compact"] = header.compact;
  out.machine["coefficients"] = job.coefficients.to_string();
  out.machine["window"] = job.window;
  out.machine["stage_sizes"] = header.stage_sizes;
  out.machine["stage_dimensions"] = header.stage_dimensions;

  Json results = Json::array();
  bool pass = true;
  for (const Request& req : job.requests) {
    if (req.op == "homology") append_limit(job, req, results, out.text, true);
    else if (req.op == "cohomology") append_limit(job, req, results, out.text, false);
    else if (req.op == "eta") append_eta(job, results, out.text);
    else if (req.op == "pair_check") append_pair_check(job, req, results, out.text, pass);
    else append_beta_check(job, req, results, out.text, pass);
  }
  out.machine["results"] = results;
  out.machine["pass"] = pass;
  out.exit_code = pass ? 0 : 1;

  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start);
  out.text += std::string("verdict: ") + (pass ? "pass" : "FAIL") + "\n";
  out.text += "elapsed: " + std::to_string(elapsed.count()) + " ms\n";
  return out;
}

Json catalog_machine() {
  Json out;
  Json list = Json::array();
  for (const Fixture& f : fixtures()) {
    Json entry;
    entry["name"] = f.name;
    entry["summary"] = f.summary;
    entry["compact"] = f.compact;
    entry["default_depth"] = f.default_depth;
    entry["table_source"] = f.table_source;
    BetaExpectation e = f.expected(FgAbGroup::free(1));
    Json expected;
    Json hom, coh;
    for (const auto& [degree, group] : e.homology) hom[std::to_string(degree)] = group.to_string();
    for (const auto& [degree, group] : e.cohomology)
      coh[std::to_string(degree)] = group.to_string();
    expected["homology"] = hom;
    expected["cohomology"] = coh;
    expected["eta"] = e.eta_value ? Json(*e.eta_value) : Json(nullptr);
    entry["expected_over_Z"] = expected;
    list.push_back(entry);
  }
  out["fixtures"] = list;
  return out;
}

static std::string catalogue_line(const std::map<int, FgAbGroup>& table,
                                  const std::string& kind) {
  std::string s;
  for (const auto& [degree, group] : table) {
    if (group.is_trivial()) continue;
    if (!s.empty()) s += ", ";
    s += degree_label(kind, degree) + " = " + group.to_string();
  }
  return s;
}

std::string catalog_text() {
  std::string out;
  for (const Fixture& f : fixtures()) {
    out += f.name + " - " + f.summary + "\n";
    out += std::string("  compact: ") + (f.compact ? "yes" : "no") +
           "    default depth: " + std::to_string(f.default_depth) + "\n";
    out += "  table source: " + f.table_source + "\n";
    BetaExpectation e = f.expected(FgAbGroup::free(1));
    std::string line = catalogue_line(e.homology, "H");
    std::string coh = catalogue_line(e.cohomology, "H^");
    if (!coh.empty()) line += (line.empty() ? "" : "; ") + coh;
    if (line.empty()) line = "all groups vanish";
    if (e.eta_value) line += "; eta = " + std::to_string(*e.eta_value);
    out += "  over Z: " + line + "\n";
  }
  return out;
}

namespace {

std::pair<int, int> parse_degree_flag(const std::string& text) {
  auto bad = [&]() -> std::pair<int, int> {
    throw ParseError("--degrees expects 'a..b' or a single degree, got '" + text + "'");
  };
  try {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
      std::size_t used = 0;
      int n = std::stoi(text, &used);
      if (used != text.size() || n < 0) return bad();
      return {n, n};
    }
    std::size_t used = 0;
    int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) return bad();
    std::string rest = text.substr(dots + 2);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) return bad();
    if (lo < 0 || hi < lo) return bad();
    return {lo, hi};
  } catch (const std::exception&) {
    return bad();
  }
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact functional Cech (co)homology over finite cover chains"};
  app.name("fcech");
  std::string job_path;
  app.add_option("job", job_path, "JSON job document to execute");
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the machine-readable report instead of text");
  std::string degrees;
  app.add_option("--degrees", degrees, "degree range a..b (overrides the document)");
  int window = 0;
  app.add_option("--window", window, "stabilization window (overrides the document)");
  std::string fixture_name;
  app.add_option("--fixture", fixture_name, "run a bundled fixture by name");
  int depth = 0;
  app.add_option("--depth", depth, "chain depth for fixture and standard spaces");
  bool list = false;
  app.add_flag("--list-fixtures", list, "enumerate the bundled fixtures and exit");

  try {
    std::vector<const char*> argv;
    argv.push_back("fcech");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Overrides o;
    if (!degrees.empty()) o.degrees = parse_degree_flag(degrees);
    if (window != 0) {
      if (window < 1) throw ParseError("--window must be at least 1");
      o.window = window;
    }
    if (depth != 0) {
      if (depth < 1) throw ParseError("--depth must be at least 1");
      o.depth = depth;
    }

    if (list) {
      if (as_json) out << catalog_machine().dump(2) << "\n";
      else out << catalog_text();
      return 0;
    }

    Job job;
    if (!fixture_name.empty()) {
      if (!job_path.empty())
        throw ParseError("give either a job document or --fixture, not both");
      job = fixture_job(fixture_name, o);
    } else if (!job_path.empty()) {
      std::ifstream in(job_path);
      if (!in) throw ParseError(job_path + ": cannot open file");
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::exception& e) {
        throw ParseError(job_path + ": " + e.what());
      }
      job = parse_job(doc, job_path, o);
    } else {
      throw ParseError("nothing to do: give a job document, --fixture, or --list-fixtures");
    }

    Outcome result = run(job);
    if (as_json) out << result.machine.dump(2) << "\n";
    else out << result.text;
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fcech::cli
