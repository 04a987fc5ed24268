#include "doldkit/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "doldkit/dynsys.hpp"
#include "doldkit/lefschetz.hpp"
#include "doldkit/properties.hpp"
#include "doldkit/repair.hpp"
#include "doldkit/series.hpp"
#include "json.hpp"

namespace doldkit::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> tokens(const std::string& text, const std::string& separators) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (separators.find(ch) != std::string::npos) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

constexpr const char* kBlank = " \t\r\n,";

bool data_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first != std::string::npos && line[first] != '#';
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

template <class T>
json strings(const std::vector<T>& values) {
  json arr = json::array();
  for (const T& v : values) arr.push_back(to_string(v));
  return arr;
}

template <class T>
json strings(const Window<T>& w) {
  return strings(std::vector<T>(w.values().begin(), w.values().end()));
}

struct Report {
  std::string command;
  std::string input_sha;
  std::string verdict = "ok";
  std::optional<std::size_t> witness_index;
  std::optional<std::string> witness_value;
  json outputs = json::object();

  template <class W>
  void take(const Verdict<W>& v) {
    verdict = v.ok() ? "holds" : "fails";
    if (!v.ok()) {
      witness_index = v.index();
      witness_value = to_string(v.witness());
    }
  }

  json to_json() const {
    json j;
    j["command"] = command;
    j["input_sha"] = input_sha;
    j["verdict"] = verdict;
    j["witness_index"] = witness_index ? json(std::to_string(*witness_index)) : json(nullptr);
    j["witness_value"] = witness_value ? json(*witness_value) : json(nullptr);
    j["outputs"] = outputs;
    return j;
  }

  int exit_code() const { return verdict == "fails" ? 1 : 0; }
};

void flatten(const std::string& key, const json& value, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) flatten(key.empty() ? k : key + "." + k, v, out);
    return;
  }
  out << key << ": ";
  if (value.is_array()) {
    bool first = true;
    for (const json& v : value) {
      if (!first) out << ", ";
      first = false;
      out << (v.is_string() ? v.get<std::string>() : v.dump());
    }
  } else if (value.is_string()) {
    out << value.get<std::string>();
  } else {
    out << value.dump();
  }
  out << '\n';
}

void render_text(const Report& r, std::ostream& out) {
  out << "command: " << r.command << '\n';
  out << "input_sha: " << r.input_sha << '\n';
  out << "verdict: " << r.verdict << '\n';
  if (r.witness_index) out << "witness_index: " << *r.witness_index << '\n';
  if (r.witness_value) out << "witness_value: " << *r.witness_value << '\n';
  flatten("", r.outputs, out);
}

struct Options {
  std::string format = "text";
  std::optional<std::size_t> N;
  std::uint64_t seed = 0;
  std::string seq;
  std::string file;

  std::string criterion;
  std::string psi;
  std::string op;
  std::string from = "fix";
  std::optional<std::size_t> fit;
  std::size_t bound = 0;
  std::size_t width = 0;
  bool generating = false;
  std::string gen;
  std::string matrix;
  std::string minus;
  bool detfix = false;
  std::string h;
  std::string bfile;
  std::string property;
  std::size_t trials = 100;
};

// Sequence input with its canonical form for hashing.
struct Input {
  std::vector<Rat> values;
  std::vector<std::string> notices;
  std::string canonical;
};

std::string raw_text(const Options& o, std::istream& in) {
  if (!o.seq.empty()) return o.seq;
  if (!o.file.empty()) return read_file(o.file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load_input(const Options& o, std::istream& in) {
  Input input;
  const std::string text = raw_text(o, in);
  bool bfile = o.seq.empty();
  if (bfile) {
    std::istringstream lines(text);
    std::string line;
    std::size_t data = 0;
    while (std::getline(lines, line)) {
      if (!data_line(line)) continue;
      ++data;
      if (tokens(line, " \t\r").size() != 2) bfile = false;
    }
    bfile = bfile && data > 0;
  }
  if (bfile) {
    BFile parsed = parse_bfile(text);
    for (const Int& v : parsed.window) input.values.emplace_back(v);
    input.notices = std::move(parsed.notices);
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!data_line(line)) continue;
      for (const std::string& t : tokens(line, kBlank)) input.values.push_back(parse_rat(t));
    }
  }
  if (input.values.empty()) throw EmptyWindow();
  if (o.N) {
    if (*o.N > input.values.size()) throw ShortWindow(input.values.size(), *o.N);
    if (*o.N == 0) throw EmptyWindow();
    input.values.resize(*o.N);
  }
  for (const Rat& v : input.values) {
    if (!input.canonical.empty()) input.canonical += ',';
    input.canonical += to_string(v);
  }
  return input;
}

SeqPrefix integers(const Input& input) {
  std::vector<Int> v;
  v.reserve(input.values.size());
  for (std::size_t i = 0; i < input.values.size(); ++i) {
    if (!is_integer(input.values[i])) {
      throw UsageError("entry " + std::to_string(i + 1) + " is not an integer");
    }
    v.push_back(input.values[i].get_num());
  }
  return SeqPrefix(std::move(v));
}

std::vector<IntPoly> load_polys(const Options& o, std::istream& in, std::string& canonical) {
  std::vector<IntPoly> polys;
  for (const std::string& term : tokens(raw_text(o, in), ";\n")) {
    if (!data_line(term)) continue;
    std::vector<Int> coeffs;
    for (const std::string& t : tokens(term, " \t\r,")) coeffs.push_back(parse_int(t));
    if (coeffs.empty()) continue;
    if (!canonical.empty()) canonical += ';';
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      canonical += (i ? "," : "") + to_string(coeffs[i]);
    }
    polys.emplace_back(std::move(coeffs));
  }
  if (polys.empty()) throw EmptyWindow();
  if (o.N) {
    if (*o.N > polys.size()) throw ShortWindow(polys.size(), *o.N);
    polys.resize(*o.N);
  }
  return polys;
}

SeqPrefix psi_weights(const std::string& spec, std::size_t N) {
  std::vector<Int> v;
  if (spec == "mu" || spec == "phi") {
    for (std::size_t n = 1; n <= N; ++n) {
      v.emplace_back(spec == "mu" ? Int(mobius(n)) : Int(static_cast<unsigned long>(euler_phi(n))));
    }
  } else {
    for (const std::string& t : tokens(spec, kBlank)) v.push_back(parse_int(t));
    if (v.empty()) throw UsageError("--psi needs 'mu', 'phi' or a list of weights");
  }
  return SeqPrefix(std::move(v));
}

void attach_notices(Report& r, const std::vector<std::string>& notices) {
  if (!notices.empty()) r.outputs["notices"] = notices;
}

std::size_t require_N(const Options& o) {
  if (!o.N) throw UsageError("--N is required for this command");
  if (*o.N == 0) throw EmptyWindow();
  return *o.N;
}

SequenceSource named_source(const std::string& name) {
  std::optional<SequenceSource> src;
  try {
    src = SequenceSource::by_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!src) throw UsageError("unknown generator: " + name);
  return *src;
}

json orbit_list(const RatSeqPrefix& b) {
  json arr = json::array();
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (b(n) != 0) arr.push_back({{"length", std::to_string(n)}, {"count", to_string(b(n))}});
  }
  return arr;
}

json combination_list(const PeriodicCombination& c) {
  json arr = json::array();
  for (const auto& [d, coeff] : c.coeffs()) {
    arr.push_back({{"period", std::to_string(d)}, {"coefficient", to_string(coeff)}});
  }
  return arr;
}

void fit_outputs(json& out, const RationalFn& fn) {
  out["numerator"] = strings(fn.numerator);
  out["denominator"] = strings(fn.denominator);
  out["degree"] = std::to_string(fn.degree());
}

std::string criterion_name(const std::string& c) {
  if (c == "dold") return "mobius";
  return c;
}

Report cmd_check(const Options& o, std::istream& in) {
  Report r;
  if (o.criterion == "qdold") {
    std::string canonical;
    const std::vector<IntPoly> polys = load_polys(o, in, canonical);
    r.input_sha = sha256_hex(canonical);
    r.take(q_dold_check(polys));
    r.outputs["criterion"] = "qdold";
    r.outputs["N"] = std::to_string(polys.size());
    return r;
  }
  const Input input = load_input(o, in);
  const SeqPrefix a = integers(input);
  r.input_sha = sha256_hex(input.canonical);
  attach_notices(r, input.notices);
  r.outputs["criterion"] = criterion_name(o.criterion);
  r.outputs["N"] = std::to_string(a.size());
  if (o.criterion == "realizable") {
    r.take(is_realizable(a));
    r.outputs["orbit_counts"] = strings(transform_B(a));
    return r;
  }
  Criterion c = Criterion::mobius();
  if (o.criterion == "phi") c = Criterion::phi();
  if (o.criterion == "prime-power") c = Criterion::prime_power();
  if (o.criterion == "psi") {
    if (o.psi.empty()) throw UsageError("--criterion psi needs --psi");
    c = Criterion::psi(psi_weights(o.psi, a.size()));
    r.outputs["psi"] = o.psi;
  }
  r.take(congruence_test(a, c));
  return r;
}

Report cmd_transform(const Options& o, std::istream& in) {
  Report r;
  const Input input = load_input(o, in);
  r.input_sha = sha256_hex(input.canonical);
  attach_notices(r, input.notices);
  const RatSeqPrefix x(input.values);
  RatSeqPrefix y = x;
  if (o.op == "B") y = transform_B(x);
  else if (o.op == "C") y = transform_C(x);
  else if (o.op == "invB") y = inverse_B(x);
  else y = inverse_C(x);
  r.outputs["op"] = o.op;
  r.outputs["values"] = strings(y);
  return r;
}

Report cmd_realize(const Options& o, std::istream& in) {
  constexpr std::uint64_t kMaxListedPoints = 4096;
  Report r;
  const Input input = load_input(o, in);
  const SeqPrefix a = integers(input);
  r.input_sha = sha256_hex(input.canonical);
  attach_notices(r, input.notices);
  const CongruenceVerdict v = is_realizable(a);
  r.take(v);
  if (!v) return r;
  const RatSeqPrefix b = transform_B(a);
  r.outputs["orbits"] = orbit_list(b);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (!b(n).get_num().fits_ulong_p()) throw UsageError("orbit count too large to realize");
    counts[n] = b(n).get_num().get_ui();
  }
  const OrbitSpec spec(std::move(counts));
  r.outputs["points"] = std::to_string(spec.points());
  if (spec.points() <= kMaxListedPoints) {
    const FiniteMap T = realize(spec);
    r.outputs["map"] = strings(std::vector<Int>(T.table().begin(), T.table().end()));
  }
  return r;
}

Report cmd_zeta(const Options& o, std::istream& in) {
  Report r;
  const Input input = load_input(o, in);
  const SeqPrefix a = integers(input);
  r.input_sha = sha256_hex(input.canonical);
  attach_notices(r, input.notices);
  std::optional<PowerSeries> Z;
  if (o.from == "fix") {
    Z = zeta_from_fix(a);
  } else {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::size_t n = 1; n <= a.size(); ++n) {
      if (a(n) < 0 || !a(n).fits_ulong_p()) throw UsageError("orbit counts must be non-negative");
      counts[n] = a(n).get_ui();
    }
    Z = zeta_product_from_orbits(OrbitSpec(std::move(counts)), a.size());
  }
  r.outputs["from"] = o.from;
  r.outputs["coefficients"] = strings(Z->coeffs());
  if (o.fit) {
    const auto fn = rational_fit(*Z, *o.fit);
    r.verdict = fn ? "holds" : "fails";
    json fit = json::object();
    fit["dmax"] = std::to_string(*o.fit);
    if (fn) fit_outputs(fit, *fn);
    r.outputs["fit"] = fit;
  }
  return r;
}

Report cmd_hankel(const Options& o, std::istream& in) {
  Report r;
  const Input input = load_input(o, in);
  r.input_sha = sha256_hex(input.canonical);
  attach_notices(r, input.notices);
  const std::size_t top = o.bound + o.width;
  if (o.generating) {
    const SeqPrefix a = integers(input);
    r.take(generating_hankel_test(a, o.bound, o.width));
    r.outputs["determinants"] = strings(hankel_dets(HankelWindow::from_generating(transform_C(a)), top));
  } else {
    const HankelWindow w(input.values);
    r.take(hankel_vanishing(w, o.bound, o.width));
    r.outputs["determinants"] = strings(hankel_dets(w, top));
  }
  r.outputs["layout"] = o.generating ? "generating" : "raw";
  return r;
}

Report cmd_failure(const Options& o) {
  Report r;
  const std::size_t N = require_N(o);
  const SequenceSource src = named_source(o.gen);
  r.input_sha = sha256_hex("gen=" + o.gen + ";N=" + std::to_string(N));
  const FailureResult f = failure_window(src, N);
  r.outputs["generator"] = src.name();
  r.outputs["window"] = std::to_string(f.window);
  r.outputs["lcm"] = to_string(f.lcm_value);
  r.outputs["last_new_prime_at"] = std::to_string(f.last_new_prime_at);
  return r;
}

Report cmd_trace(const Options& o) {
  Report r;
  const std::size_t N = require_N(o);
  const std::string text = read_file(o.matrix);
  const IntMatrix A = parse_matrix(text);
  std::string canonical = format_matrix(A);
  SeqPrefix seq = trace_sequence(A, N);
  if (!o.minus.empty()) {
    const IntMatrix B = parse_matrix(read_file(o.minus));
    canonical += "|" + format_matrix(B);
    seq = lefschetz_sequence(A, B, N);
  }
  if (o.detfix) seq = det_fix_sequence(A, N);
  r.input_sha = sha256_hex(canonical + "|N=" + std::to_string(N) + (o.detfix ? "|detfix" : ""));
  r.outputs["sequence"] = o.detfix ? "detfix" : (o.minus.empty() ? "trace" : "lefschetz");
  r.outputs["values"] = strings(seq);
  r.outputs["dold"] = congruence_test(seq, Criterion::mobius()).ok() ? "holds" : "fails";
  return r;
}

Report cmd_timechange(const Options& o, std::istream& in) {
  Report r;
  const TimeChange h = TimeChange::parse(o.h);
  std::optional<SequenceSource> src;
  std::size_t N = 0;
  if (!o.gen.empty()) {
    N = require_N(o);
    src = named_source(o.gen);
    r.input_sha = sha256_hex("gen=" + o.gen + ";N=" + std::to_string(N) + ";h=" + h.describe());
  } else {
    Options full = o;
    full.N.reset();
    const Input input = load_input(full, in);
    src = SequenceSource::prefix(integers(input));
    N = o.N ? *o.N : input.values.size();
    r.input_sha = sha256_hex(input.canonical + ";N=" + std::to_string(N) + ";h=" + h.describe());
    attach_notices(r, input.notices);
  }
  const SeqPrefix a = apply_time_change(*src, h, N);
  r.outputs["h"] = h.describe();
  r.outputs["values"] = strings(a);
  r.outputs["realizable"] = is_realizable(a).ok() ? "holds" : "fails";
  return r;
}

json verdict_json(const CongruenceVerdict& v) {
  json j;
  j["verdict"] = v.ok() ? "holds" : "fails";
  if (!v.ok()) {
    j["index"] = std::to_string(v.index());
    j["witness"] = to_string(v.witness());
  }
  return j;
}

Report cmd_classify(const Options& o, std::istream& in) {
  constexpr std::size_t kMaxDegree = 8;
  Report r;
  Options opts = o;
  if (!o.bfile.empty()) opts.file = o.bfile;
  const Input input = load_input(opts, in);
  const SeqPrefix a = integers(input);
  const std::size_t N = a.size();
  r.input_sha = sha256_hex(input.canonical);
  attach_notices(r, input.notices);
  r.outputs["N"] = std::to_string(N);
  r.outputs["dold"] = verdict_json(congruence_test(a, Criterion::mobius()));
  r.outputs["realizable"] = verdict_json(is_realizable(a));

  json periodic;
  const std::size_t bound = N / 2;
  periodic["bound"] = std::to_string(bound);
  const auto expansion = periodic_expansion(a, bound);
  if (const auto* comb = std::get_if<PeriodicCombination>(&expansion)) {
    periodic["verdict"] = "periodic";
    periodic["combination"] = combination_list(*comb);
  } else {
    periodic["verdict"] = "not periodic";
    periodic["index"] = std::to_string(std::get<NotPeriodic>(expansion).index);
  }
  r.outputs["periodic"] = periodic;

  json rec;
  const std::size_t p_max = std::min(kMaxDegree, (N - 1) / 2);
  rec["p_max"] = std::to_string(p_max);
  const auto found = recurrence_detect(HankelWindow::from_generating(transform_C(a)), p_max);
  rec["order"] = found ? std::to_string(found->order) : "none";
  if (found) rec["alpha"] = strings(found->alpha);
  r.outputs["generating_recurrence"] = rec;

  json zeta;
  if (N >= 2) {
    const std::size_t dmax = std::min(kMaxDegree, (N - 2) / 2);
    zeta["dmax"] = std::to_string(dmax);
    const auto fn = rational_fit(zeta_from_fix(a), dmax);
    zeta["verdict"] = fn ? "rational" : "no fit";
    if (fn) fit_outputs(zeta, *fn);
  } else {
    zeta["verdict"] = "window too short";
  }
  r.outputs["zeta"] = zeta;

  const FailureResult f = failure_window(SequenceSource::prefix(a), N);
  r.outputs["failure"] = {{"lcm", to_string(f.lcm_value)},
                          {"last_new_prime_at", std::to_string(f.last_new_prime_at)}};
  return r;
}

Report cmd_property(const Options& o) {
  Report r;
  r.input_sha = sha256_hex("property=" + o.property + ";seed=" + std::to_string(o.seed) +
                           ";trials=" + std::to_string(o.trials));
  PropertyResult p;
  try {
    p = run_property(o.property, o.seed, o.trials);
  } catch (const std::invalid_argument& e) {
    std::string names;
    for (const std::string& n : property_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError(std::string(e.what()) + " (known: " + names + ")");
  }
  r.verdict = p.failures == 0 ? "holds" : "fails";
  r.outputs["name"] = p.name;
  r.outputs["seed"] = std::to_string(o.seed);
  r.outputs["trials"] = std::to_string(p.trials);
  r.outputs["failures"] = std::to_string(p.failures);
  if (p.first_failure) r.outputs["first_failure"] = *p.first_failure;
  return r;
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const std::string& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

}  // namespace

BFile parse_bfile(const std::string& text) {
  BFile out;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!data_line(line)) continue;
    const std::vector<std::string> parts = tokens(line, " \t\r");
    if (parts.size() != 2) throw MalformedLine(lineno);
    Int index;
    Int value;
    try {
      index = parse_int(parts[0]);
      value = parse_int(parts[1]);
    } catch (const std::exception&) {
      throw MalformedLine(lineno);
    }
    if (!out.entries.empty() && index <= out.entries.back().first) throw NonMonotoneIndex(lineno);
    out.entries.emplace_back(std::move(index), std::move(value));
  }

  std::size_t i = 0;
  while (i < out.entries.size() && out.entries[i].first <= 0) ++i;
  if (i > 0) {
    out.notices.push_back("dropped " + std::to_string(i) + " entr" + (i == 1 ? "y" : "ies") +
                          " with index <= 0");
  }
  if (i == out.entries.size()) return out;
  const Int start = out.entries[i].first;
  if (start != 1) out.notices.push_back("window rebased from index " + to_string(start) + " to 1");
  Int expected = start;
  for (; i < out.entries.size(); ++i) {
    if (out.entries[i].first != expected) {
      out.notices.push_back("window stops at gap before index " + to_string(out.entries[i].first));
      break;
    }
    out.window.push_back(out.entries[i].second);
    expected += 1;
  }
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact tests and transforms for Dold and realizable integer sequences", "doldkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--N", o.N, "Window length");
  app.add_option("--seed", o.seed, "Seed for randomized commands");
  app.add_option("--seq", o.seq, "Inline sequence, comma or space separated");
  app.add_option("--file", o.file, "Sequence file (plain list or b-file)");

  auto* check = app.add_subcommand("check", "Congruence or realizability test");
  check->add_option("--criterion", o.criterion, "Which test to run")
      ->required()
      ->check(CLI::IsMember({"dold", "phi", "prime-power", "psi", "realizable", "qdold"}));
  check->add_option("--psi", o.psi, "Weights for --criterion psi: mu, phi or a list");

  auto* transform = app.add_subcommand("transform", "Orbit-count and generating transforms");
  transform->add_option("--op", o.op, "B, C or their inverses")->required()->check(
      CLI::IsMember({"B", "C", "invB", "invC"}));

  auto* realize_cmd = app.add_subcommand("realize", "Build a map with the given fixed-point counts");

  auto* zeta = app.add_subcommand("zeta", "Dynamical zeta function");
  zeta->add_option("--from", o.from, "Input is fixed-point counts or orbit counts")->check(CLI::IsMember({"fix", "orbits"}));
  zeta->add_option("--fit", o.fit, "Fit a rational function of degree <= dmax");

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant vanishing test");
  hankel->add_option("--bound", o.bound, "Smallest m with Delta_m tested")->required();
  hankel->add_option("--width", o.width, "Test bound..bound+width")->required();
  hankel->add_flag("--generating", o.generating, "Use the generating sequence of the input");

  auto* failure = app.add_subcommand("failure", "Windowed failure factor of a named generator");
  failure->add_option("--gen", o.gen, "fib, lucas, fib-power-J, stirling1-K, stirling2-K, bernoulli-tau, bernoulli-beta, euler-abs")->required();

  auto* trace = app.add_subcommand("trace", "Trace, Lefschetz or det-fix sequences of a matrix");
  trace->add_option("--matrix", o.matrix, "Matrix file: dimension, then one row per line")->required();
  trace->add_option("--minus", o.minus, "Second matrix B for trace(A^n) - trace(B^n)");
  trace->add_flag("--detfix", o.detfix, "Emit |det(I - A^n)| instead of traces");

  auto* timechange = app.add_subcommand("timechange", "Apply a time change to a sequence");
  timechange->set_help_flag("--help", "Print this help message and exit");
  timechange->add_option("--h", o.h, "mono:K,L or gp:P, composed with ';'")->required();
  timechange->add_option("--gen", o.gen, "Named generator instead of an input window");

  auto* classify = app.add_subcommand("classify", "Composite report for a sequence");
  classify->add_option("bfile", o.bfile, "b-file to classify");

  auto* property = app.add_subcommand("property", "Run a randomized invariant check");
  property->add_option("--name", o.property, "Property name")->required();
  property->add_option("--trials", o.trials, "Number of random trials");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    Report r;
    if (check->parsed()) r = cmd_check(o, in);
    else if (transform->parsed()) r = cmd_transform(o, in);
    else if (realize_cmd->parsed()) r = cmd_realize(o, in);
    else if (zeta->parsed()) r = cmd_zeta(o, in);
    else if (hankel->parsed()) r = cmd_hankel(o, in);
    else if (failure->parsed()) r = cmd_failure(o);
    else if (trace->parsed()) r = cmd_trace(o);
    else if (timechange->parsed()) r = cmd_timechange(o, in);
    else if (classify->parsed()) r = cmd_classify(o, in);
    else r = cmd_property(o);
    r.command = join(args);
    if (o.format == "json") {
      out << r.to_json().dump(2) << '\n';
    } else {
      render_text(r, out);
    }
    return r.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace doldkit::cli
