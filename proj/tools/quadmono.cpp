// Command-line front end. Exit codes: 0 ok, 1 verification mismatch,
// 2 usage, 3 parse error, 4 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadmono.hpp"

namespace qm = quadmono;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2, parse_failure = 3, cap_hit = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

qm::Family family_or_throw(const std::string& s) {
  auto f = qm::parse_family(s);
  if (!f) throw UsageError("unknown family '" + s + "' (expected a, b or c)");
  return *f;
}

struct BatteryArgs {
  std::string battery;  // empty: QUADMONO_BATTERY or the default
  std::vector<std::string> group_files;
  std::uint64_t cap = qm::default_hom_cap;

  std::vector<qm::FiniteGroup> groups() const {
    std::string spec = battery;
    if (spec.empty())
      if (const char* env = std::getenv("QUADMONO_BATTERY")) spec = env;
    std::vector<qm::FiniteGroup> out;
    try {
      out = spec.empty() ? qm::default_battery() : qm::parse_battery(spec);
    } catch (const qm::Error& e) {
      throw UsageError(e.what());
    }
    for (const auto& f : group_files) {
      const std::string text = read_file(f);
      qm::Json j;
      try {
        j = qm::Json::parse(text);
      } catch (const qm::Json::parse_error& e) {
        throw qm::ParseError(1, e.byte, e.what());
      }
      out.push_back(qm::group_from_json(j));
    }
    return out;
  }
};

void add_battery_options(CLI::App* cmd, BatteryArgs& b) {
  cmd->add_option("--battery", b.battery, "comma-separated groups (s3,s4,a4,d4,zN,trivial)");
  cmd->add_option("--group", b.group_files, "extra target group as multiplication-table JSON");
  cmd->add_option("--cap", b.cap, "largest |G|^generators enumerated")->capture_default_str();
}

void emit(const qm::Presentation& p, const std::string& format) {
  if (format == "json")
    std::cout << qm::to_json(p).dump(2) << '\n';
  else if (format == "gap")
    std::cout << qm::render_gap(p);
  else
    std::cout << qm::to_string(p) << '\n' << qm::render_text(p);
}

qm::Presentation maybe_simplify(const qm::Presentation& p, bool simplify) {
  return simplify ? qm::relabel(qm::simplify(p)) : p;
}

// ---------------------------------------------------------------------------

struct PresentArgs {
  std::string family;
  unsigned n = 1;
  std::string source = "formula";
  bool simplify = false;
  bool printed = false;
  std::string format = "text";
};

int run_present(const PresentArgs& a) {
  const qm::Family f = family_or_throw(a.family);
  if (a.n == 0) throw UsageError("--n must be at least 1");
  qm::Presentation p;
  if (a.source == "formula") {
    p = qm::formula_relations(f, a.n, a.printed ? qm::TangencyOrder::printed : qm::TangencyOrder::descending);
  } else {
    auto t = qm::braid_table(f, a.n);
    if (!t)
      throw UsageError(std::string("no monodromy table for ") + qm::family_letter(f) + std::to_string(a.n) +
                       "; use --source formula");
    p = qm::present(*t);
  }
  emit(maybe_simplify(p, a.simplify), a.format);
  return ok;
}

struct TableArgs {
  std::string file;
  bool simplify = false;
  std::string format = "text";
};

int run_table(const TableArgs& a) {
  const std::string text = read_file(a.file);
  qm::MonodromyTable t;
  if (looks_like_json(text)) {
    qm::Json j;
    try {
      j = qm::Json::parse(text);
    } catch (const qm::Json::parse_error& e) {
      throw qm::ParseError(1, e.byte, e.what());
    }
    try {
      t = qm::table_from_json(j);
    } catch (const qm::Json::exception& e) {
      throw qm::ParseError(1, 1, e.what());
    } catch (const qm::ParseError&) {
      throw;
    } catch (const qm::Error& e) {
      throw qm::ParseError(1, 1, e.what());
    }
  } else {
    t = qm::parse_table(text);
  }
  emit(maybe_simplify(qm::present(t), a.simplify), a.format);
  return ok;
}

struct ShowTableArgs {
  std::string id;
  std::string format = "text";
};

int run_show_table(const ShowTableArgs& a) {
  qm::MonodromyTable t;
  try {
    t = qm::builtin_table(a.id);
  } catch (const qm::Error& e) {
    throw UsageError(e.what());
  }
  if (a.format == "json")
    std::cout << qm::to_json(t).dump(2) << '\n';
  else
    std::cout << qm::render_table(t);
  return ok;
}

struct VerifyArgs {
  std::string family;
  unsigned n = 1;
  BatteryArgs battery;
};

int run_verify(const VerifyArgs& a) {
  const qm::Family f = family_or_throw(a.family);
  if (a.n == 0) throw UsageError("--n must be at least 1");
  const auto groups = a.battery.groups();
  const std::string name = std::string(1, qm::family_letter(f)) + std::to_string(a.n);
  bool pass = true;
  const auto line = [&](bool good, const std::string& what) {
    std::cout << (good ? "PASS " : "FAIL ") << what << '\n';
    pass = pass && good;
  };

  const qm::Presentation target = qm::target_presentation(f, a.n);
  const qm::Fingerprint want = qm::fingerprint(target, groups, a.battery.cap);
  std::cout << name << " target " << qm::to_string(target) << '\n';
  std::cout << "  fingerprint " << qm::to_string(want) << '\n';

  const qm::Presentation formula = qm::formula_relations(f, a.n);
  const qm::Presentation fs = qm::relabel(qm::simplify(formula));
  const qm::Fingerprint got = qm::fingerprint(fs, groups, a.battery.cap);
  const bool recon = formula.meta.count("reconstructed") != 0;
  line(got == want, "formula " + qm::to_string(fs) + (recon ? " (reconstructed schema)" : ""));
  if (!(got == want)) std::cout << "  got " << qm::to_string(got) << '\n';

  if (auto t = qm::braid_table(f, a.n)) {
    const qm::Presentation bs = qm::relabel(qm::simplify(qm::present(*t)));
    const qm::Fingerprint bg = qm::fingerprint(bs, groups, a.battery.cap);
    line(bg == want, "braid " + qm::to_string(bs) + (t->reconstructed ? " (reconstructed table)" : ""));
    if (!(bg == want)) std::cout << "  got " << qm::to_string(bg) << '\n';
  } else {
    std::cout << "SKIP braid (no table for " << name << ")\n";
  }

  const qm::AbelianInvariants ab = qm::abelianization(fs);
  const bool ab_ok = ab.free_rank == a.n - 1 && ab.torsion.size() == 1 && ab.torsion[0] == 2;
  line(ab_ok, "abelianization " + qm::to_string(ab));

  if (a.n >= 2) {
    const auto cert = qm::bigness_certificate(fs, {fs.generators[0], fs.generators[1]}, groups, {}, a.battery.cap);
    line(cert.ok, "big: quotient onto " + qm::to_string(cert.quotient) + " keeping " + cert.pair[0] + "," +
                      cert.pair[1]);
  } else {
    qm::Presentation z2 = qm::Presentation::numbered(1);
    z2.add_relator(qm::FreeWord::generator(1, 2));
    line(qm::fingerprint(z2, groups, a.battery.cap) == got, "fingerprint consistent with Z2");
  }
  std::cout << (pass ? "verify: all checks passed (fingerprints are consistent with isomorphism)\n"
                     : "verify: mismatch\n");
  return pass ? ok : mismatch;
}

struct InvariantsArgs {
  std::string file;
  bool no_simplify = false;
  std::string format = "text";
  BatteryArgs battery;
};

int run_invariants(const InvariantsArgs& a) {
  const std::string text = read_file(a.file);
  qm::Presentation raw;
  try {
    raw = qm::read_presentation(text);
  } catch (const qm::ParseError&) {
    throw;
  } catch (const qm::Json::exception& e) {
    throw qm::ParseError(1, 1, e.what());
  } catch (const qm::Error& e) {
    throw qm::ParseError(1, 1, e.what());
  }
  const auto groups = a.battery.groups();
  const qm::Presentation p = a.no_simplify ? raw : qm::simplify(raw);
  const qm::Fingerprint f = qm::fingerprint(p, groups, a.battery.cap);
  if (a.format == "json") {
    qm::Json j = qm::to_json(f);
    j["presentation"] = qm::to_string(qm::relabel(p, ""));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "abelianization " << qm::to_string(f.abelian) << '\n';
    for (const auto& [name, c] : f.homs) std::cout << "homs " << name << ' ' << c << '\n';
  }
  return ok;
}

struct SelftestArgs {
  std::uint64_t seed = 1;
  unsigned count = 200;
};

// Quick randomized checks of the core laws; the test suite runs the same
// properties with more cases.
int run_selftest(const SelftestArgs& a) {
  std::mt19937_64 rng(a.seed);
  const auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  unsigned failures = 0;
  for (unsigned c = 0; c < a.count; ++c) {
    const unsigned p = 6;
    qm::Braid b(p);
    for (int k = uniform(0, 12); k > 0; --k) b.append(static_cast<unsigned>(uniform(1, p - 1)), uniform(0, 1) ? 1 : -1);
    const qm::FreeWord boundary = qm::boundary_word(p, qm::ArtinConvention::upper_conjugates);
    if (qm::artin_apply(b, boundary) != boundary) ++failures;

    qm::Presentation q = qm::Presentation::numbered(static_cast<std::size_t>(uniform(1, 3)));
    for (int r = uniform(1, 3); r > 0; --r) {
      std::vector<qm::Letter> ls;
      for (int k = uniform(1, 6); k > 0; --k) {
        const int g = uniform(1, static_cast<int>(q.generators.size()));
        ls.push_back(uniform(0, 1) ? g : -g);
      }
      q.add_relator(qm::FreeWord::from_letters(std::span<const qm::Letter>(ls)));
    }
    const std::vector<qm::FiniteGroup> bat{qm::builtin_group("s3"), qm::builtin_group("d4")};
    if (!(qm::fingerprint(q, bat) == qm::fingerprint(qm::simplify(q), bat))) ++failures;
  }
  std::cout << "selftest seed " << a.seed << ": " << a.count << " cases, " << failures << " failures\n";
  return failures == 0 ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of quadric arrangement complements"};
  app.require_subcommand(1);

  PresentArgs pa;
  auto* present = app.add_subcommand("present", "presentation for a family member");
  present->add_option("--family", pa.family, "a, b or c")->required();
  present->add_option("--n", pa.n, "number of quadrics")->required();
  present->add_option("--source", pa.source, "formula or braid")
      ->check(CLI::IsMember({"formula", "braid"}))
      ->capture_default_str();
  present->add_flag("--simplify", pa.simplify, "run Tietze simplification");
  present->add_flag("--printed-tangency", pa.printed, "use ascending tangency chains (formula source)");
  present->add_option("--format", pa.format, "text, json or gap")
      ->check(CLI::IsMember({"text", "json", "gap"}))
      ->capture_default_str();

  TableArgs ta;
  auto* table = app.add_subcommand("table", "presentation from a monodromy table file");
  table->add_option("file", ta.file, "table file (text or JSON)")->required();
  table->add_flag("--simplify", ta.simplify, "run Tietze simplification");
  table->add_option("--format", ta.format, "text, json or gap")
      ->check(CLI::IsMember({"text", "json", "gap"}))
      ->capture_default_str();

  ShowTableArgs sa;
  auto* show = app.add_subcommand("show-table", "print a built-in monodromy table");
  show->add_option("case", sa.id, "A2, A3, B2, B3, C2 or C3")->required();
  show->add_option("--format", sa.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a family member against its theorem presentation");
  verify->add_option("--family", va.family, "a, b or c")->required();
  verify->add_option("--n", va.n, "number of quadrics")->required();
  add_battery_options(verify, va.battery);

  InvariantsArgs ia;
  auto* inv = app.add_subcommand("invariants", "fingerprint of a presentation file");
  inv->add_option("file", ia.file, "presentation (text or JSON)")->required();
  inv->add_flag("--no-simplify", ia.no_simplify, "count on the presentation as given");
  inv->add_option("--format", ia.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_battery_options(inv, ia.battery);

  SelftestArgs st;
  auto* self = app.add_subcommand("selftest", "randomized checks of the core laws");
  self->add_option("--seed", st.seed, "random seed")->capture_default_str();
  self->add_option("--count", st.count, "number of cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*present) return run_present(pa);
    if (*table) return run_table(ta);
    if (*show) return run_show_table(sa);
    if (*verify) return run_verify(va);
    if (*inv) return run_invariants(ia);
    if (*self) return run_selftest(st);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const qm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const qm::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << " (raise --cap or simplify first)\n";
    return cap_hit;
  } catch (const qm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
