#include "torus/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "torus/decoder.hpp"
#include "torus/error.hpp"
#include "torus/hecke.hpp"
#include "torus/serialize.hpp"

namespace torus {

namespace {

struct Options {
  int n = 0;
  int m = 0;
  std::string rep = "rho3";
  std::string specialize;
  std::uint64_t seed = 1;
  long count = 100;
  std::string format = "json";
  std::string out;
  std::string input;
  bool toric = false;
  std::string gens;
  long cap = 10000;
  bool plain_bar = false;
};

// A finished command: the document to print and the exit code it implies.
struct Outcome {
  Json doc;
  int code = kExitPass;
};

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PatternInvalid:
    case ErrorKind::DeltaResidue:
    case ErrorKind::NonTermination:
      return kExitDecode;
    case ErrorKind::CapExceeded:
      return kExitCap;
    case ErrorKind::ShapeMismatch:
    case ErrorKind::ReflectionCheckFailed:
      return kExitPropertyFailure;
    default:
      return kExitUsage;
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::BadParameters, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::BadParameters, std::string("invalid JSON: ") + e.what());
  }
}

bool specialized(const Options& o) {
  if (o.specialize.empty()) return false;
  if (o.specialize == "t=q") return true;
  throw Error(ErrorKind::BadParameters, "--specialize accepts only t=q");
}

std::string word_text(const Options& o, std::istream& in) {
  return o.input == "-" ? read_source("-", in) : o.input;
}

Outcome cmd_nf(const Options& o, std::istream& in) {
  return {to_json(normalize(parse_word(word_text(o, in), o.n, o.m)))};
}

Outcome cmd_encode(const Options& o, std::istream& in) {
  const Rep rep = Rep::build(parse_kind(o.rep), o.n, o.m);
  return {to_json(encode(rep, parse_word(word_text(o, in), o.n, o.m), specialized(o)))};
}

Outcome cmd_decode(const Options& o, std::istream& in) {
  const Rep rep = Rep::build(parse_kind(o.rep), o.n, o.m);
  const bool collapse = specialized(o);
  const Mat2 mat = mat2_from_json(parse_document(read_source(o.input.empty() ? "-" : o.input, in)));
  return {to_json(decode(rep, mat, collapse))};
}

Outcome cmd_verify(const Options& o, std::istream&) {
  const FundReport r = verify_fund(Rep::build(parse_kind(o.rep), o.n, o.m));
  return {to_json(r), r.passed() ? kExitPass : kExitPropertyFailure};
}

// Seeded batch: case i draws its own word seed and 0-2 D insertions from one
// stream, so results depend only on (seed, count).
Json roundtrip_batch(const Generators& gens, long count, std::uint64_t seed, long& matches) {
  std::mt19937_64 rng(seed);
  Json failures = Json::array();
  matches = 0;
  for (long i = 0; i < count; ++i) {
    const std::uint64_t case_seed = rng();
    const int insertions = static_cast<int>(rng() % 3);
    const MonoidWord w = random_word(gens.n, gens.m, 200, insertions, case_seed);
    const NormalForm expected = normalize(w);
    try {
      const NormalForm got = decode(gens, encode(gens, w));
      if (got == expected) {
        ++matches;
        continue;
      }
      failures.push_back({{"index", i}, {"word", to_string(w)}, {"got", to_json(got)}, {"expected", to_json(expected)}});
    } catch (const Error& e) {
      failures.push_back({{"index", i}, {"word", to_string(w)}, {"error", std::string(e.name())}});
    }
  }
  return failures;
}

Outcome cmd_roundtrip(const Options& o, std::istream&) {
  if (o.count < 0) throw Error(ErrorKind::BadParameters, "--count must be non-negative");
  const Rep rep = Rep::build(parse_kind(o.rep), o.n, o.m);
  const bool collapse = specialized(o);
  long matches = 0;
  Json failures = roundtrip_batch(rep.generators(collapse), o.count, o.seed, matches);
  const bool ok = matches == o.count;
  return {{{"count", o.count},
           {"matches", matches},
           {"mode", collapse ? "t=q" : "generic"},
           {"seed", o.seed},
           {"failures", failures},
           {"passed", ok}},
          ok ? kExitPass : kExitPropertyFailure};
}

Outcome cmd_hecke(const Options& o, std::istream&) {
  if (o.count < 0) throw Error(ErrorKind::BadParameters, "--count must be non-negative");
  const Rep rep = Rep::build(RepKind::Rho3, o.n, o.m);
  const HeckeResult h = hecke_specialize(rep);
  long matches = 0;
  Json failures = roundtrip_batch(h.collapsed, o.count, o.seed, matches);
  const bool ok = h.recheck.passed() && h.quadratic && matches == o.count;
  return {{{"rule", h.rule.describe()},
           {"a", h.rule.a},
           {"ell", h.rule.ell},
           {"recheck", to_json(h.recheck)},
           {"meridian", to_json(h.meridian)},
           {"quadratic", h.quadratic},
           {"roundtrip", {{"count", o.count}, {"matches", matches}, {"failures", failures}}},
           {"passed", ok}},
          ok ? kExitPass : kExitPropertyFailure};
}

Outcome cmd_closure(const Options& o, std::istream& in) {
  std::vector<Mat2> gens;
  if (o.toric == !o.gens.empty()) throw Error(ErrorKind::BadParameters, "closure needs exactly one of --toric, --gens");
  if (o.toric) {
    const ToricResult t = toric_specialize(Rep::rho3(o.n, o.m));
    gens = {t.x, t.y};
  } else {
    const Json doc = parse_document(read_source(o.gens, in));
    if (!doc.is_array()) throw Error(ErrorKind::BadParameters, "--gens expects a JSON array of matrices");
    for (const auto& g : doc) gens.push_back(mat2_from_json(g));
  }
  const ClosureResult r = group_closure(gens, o.cap);
  return {to_json(r), r.order ? kExitPass : kExitCap};
}

Outcome cmd_unitary(const Options& o, std::istream&) {
  const UnitarityReport r = unitarity_check(Rep::build(parse_kind(o.rep), o.n, o.m), !o.plain_bar);
  return {{{"q_rotated", r.q_rotated}, {"x", r.x_ok}, {"y", r.y_ok}, {"passed", r.passed()}},
          r.passed() ? kExitPass : kExitPropertyFailure};
}

Outcome cmd_powers(const Options& o, std::istream&) {
  const Rep rep = Rep::build(parse_kind(o.rep), o.n, o.m);
  const long range = o.n + o.m;
  Json mismatches = Json::array();
  long compared = 0;
  for (Letter l : {Letter::X, Letter::Y}) {
    for (long k = -range; k <= range; ++k) {
      ++compared;
      if (!(closed_form_power(rep, l, k) == rep.generic().gen(l).pow(k))) {
        mismatches.push_back({{"letter", std::string(1, static_cast<char>(l))}, {"k", k}});
      }
    }
  }
  const bool ok = mismatches.empty();
  return {{{"range", range}, {"compared", compared}, {"mismatches", mismatches}, {"passed", ok}},
          ok ? kExitPass : kExitPropertyFailure};
}

Outcome cmd_rep(const Options& o, std::istream&) { return {to_json(Rep::build(parse_kind(o.rep), o.n, o.m))}; }

bool is_mat2(const Json& j) { return j.is_object() && j.contains("a11") && j.contains("a22"); }
bool is_normal_form(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("delta") && j.contains("syllables"); }

std::string nf_text(const Json& j) {
  std::string s;
  const long k = j.at("delta").get<long>();
  if (k != 0) s = k == 1 ? "D" : "D^" + std::to_string(k);
  for (const auto& syl : j.at("syllables")) {
    if (!s.empty()) s += ' ';
    s += syl[0].get<std::string>();
    if (syl[1].get<long>() != 1) s += "^" + std::to_string(syl[1].get<long>());
  }
  return s.empty() ? "1" : s;
}

// Human rendering of a document: matrices and normal forms in algebraic
// notation, everything else as an indented key listing.
void render_text(const Json& j, int indent, std::ostream& os) {
  const std::string pad(indent, ' ');
  if (is_mat2(j)) {
    os << pad << to_text(mat2_from_json(j)) << '\n';
  } else if (is_normal_form(j)) {
    os << pad << nf_text(j) << '\n';
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || (value.is_array() && value.empty())) {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      } else {
        os << pad << key << ":\n";
        render_text(value, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_primitive()) {
        os << pad << "- " << item.dump() << '\n';
      } else {
        os << pad << "-\n";
        render_text(item, indent + 2, os);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  std::ostringstream buf;
  if (o.format == "text") {
    render_text(doc, 0, buf);
  } else {
    buf << doc.dump() << '\n';
  }
  if (o.out.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::BadParameters, "cannot write '" + o.out + "'");
  f << buf.str();
}

std::uint64_t default_seed(std::ostream& err) {
  const char* env = std::getenv("GB_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used);
    if (used == std::char_traits<char>::length(env)) return v;
  } catch (const std::exception&) {
  }
  err << "warning: ignoring unparsable GB_SEED='" << env << "'\n";
  return 1;
}

}  // namespace

int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  o.seed = default_seed(err);
  CLI::App app{"Exact linear representations of torus knot groups"};
  app.require_subcommand(1);

  using Command = Outcome (*)(const Options&, std::istream&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write the document to a file");
    commands.emplace_back(sub, run);
    return sub;
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Exponent of Y in the relation")->required();
    sub->add_option("--m", o.m, "Exponent of X in the relation")->required();
  };
  auto kind = [&](CLI::App* sub) {
    sub->add_option("--rep", o.rep, "Representation: rho1, rho2 or rho3")->check(CLI::IsMember({"rho1", "rho2", "rho3"}));
  };
  auto mode = [&](CLI::App* sub) { sub->add_option("--specialize", o.specialize, "Collapse t onto q (t=q)"); };
  auto batch = [&](CLI::App* sub) {
    sub->add_option("--count", o.count, "Number of random words");
    sub->add_option("--seed", o.seed, "Seed (default: GB_SEED or 1)");
  };

  CLI::App* nf = add("nf", "Garside normal form of a word", cmd_nf);
  params(nf);
  nf->add_option("word", o.input, "Word over X, Y, D; '-' reads stdin");

  CLI::App* enc = add("encode", "Matrix image of a word", cmd_encode);
  params(enc);
  kind(enc);
  mode(enc);
  enc->add_option("word", o.input, "Word over X, Y, D; '-' reads stdin");

  CLI::App* dec = add("decode", "Normal form read back from a matrix document", cmd_decode);
  params(dec);
  kind(dec);
  mode(dec);
  dec->add_option("file", o.input, "Matrix document; '-' or absent reads stdin");

  CLI::App* ver = add("verify", "Check the three defining conditions", cmd_verify);
  params(ver);
  kind(ver);

  CLI::App* rt = add("roundtrip", "Encode and decode seeded random words", cmd_roundtrip);
  params(rt);
  kind(rt);
  mode(rt);
  batch(rt);

  CLI::App* hk = add("hecke", "Hecke specialization of rho3 with quadratic and round-trip checks", cmd_hecke);
  params(hk);
  batch(hk);

  CLI::App* cl = add("closure", "Order of a finite matrix group", cmd_closure);
  cl->add_option("--n", o.n, "Exponent of Y in the relation");
  cl->add_option("--m", o.m, "Exponent of X in the relation");
  cl->add_flag("--toric", o.toric, "Use the toric specialization of rho3");
  cl->add_option("--gens", o.gens, "JSON array of constant matrices; '-' reads stdin");
  cl->add_option("--cap", o.cap, "Maximum number of elements");

  CLI::App* un = add("unitary", "Check the hermitian form on both generators", cmd_unitary);
  params(un);
  kind(un);
  un->add_flag("--plain-bar", o.plain_bar, "Leave cyclotomic coefficients unconjugated");

  CLI::App* pw = add("powers", "Compare closed-form powers with repeated products", cmd_powers);
  params(pw);
  kind(pw);

  CLI::App* rp = add("rep", "Generator matrices and constants", cmd_rep);
  params(rp);
  kind(rp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  for (const auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Outcome r = run(o, in);
      emit(r.doc, o, out);
      return r.code;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return exit_for(e.kind());
    }
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage{"torusrep"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(storage.size()), argv.data(), in, out, err);
}

}  // namespace torus
