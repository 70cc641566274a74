#include "harmonia/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "harmonia/errors.hpp"
#include "harmonia/io.hpp"
#include "harmonia/verify.hpp"

namespace harmonia {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs job(i) for i in [0, n) on a small worker pool; results are stored by
// index so output order never depends on scheduling.
template <class T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& job) {
  std::vector<T> results(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        results[static_cast<std::size_t>(i)] = job(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(config.out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + config.out + "' for writing");
  f << text;
  if (!f.flush()) throw IoError("write to '" + config.out + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("read from '" + path + "' failed");
  return ss.str();
}

std::vector<ModeBasis> load_bases(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
  std::vector<ModeBasis> out;
  if (doc.is_array()) {
    for (const auto& j : doc) out.push_back(mode_basis_from_json(j));
  } else {
    out.push_back(mode_basis_from_json(doc));
  }
  return out;
}

void check_range(const RunConfig& c) {
  if (c.k_lo < 0 || c.k_hi < c.k_lo) throw std::invalid_argument("k range must satisfy 0 <= lo <= hi");
}

int wrap(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace

int run_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return wrap([&] {
    check_range(config);
    const int n = config.k_hi - config.k_lo + 1;
    auto docs = parallel_map<Json>(n, [&](int i) {
      return to_json(full_basis(config.space, config.k_lo + i, config.normalization));
    });
    Json doc = n == 1 ? docs.front() : Json(docs);
    emit(config, out, doc.dump() + "\n");
    return kExitOk;
  }, err);
}

int run_dims(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return wrap([&] {
    check_range(config);
    if (config.format != "csv" && config.format != "json")
      throw std::invalid_argument("format must be csv or json");
    if (config.oracle && config.k_hi > kOracleBound)
      throw LimitExceeded("oracle bound is k <= " + std::to_string(kOracleBound));
    const int n = config.k_hi - config.k_lo + 1;
    auto oracle = parallel_map<long>(n, [&](int i) {
      return config.oracle ? invariant_dimension_oracle(config.space, config.k_lo + i) : -1L;
    });
    bool ok = true;
    std::ostringstream csv;
    Json rows = Json::array();
    csv << (config.oracle ? "k,dimension,oracle\n" : "k,dimension\n");
    for (int i = 0; i < n; ++i) {
      const int k = config.k_lo + i;
      const long d = dimension(config.space, k);
      Json row{{"k", k}, {"dimension", d}};
      csv << k << "," << d;
      if (config.oracle) {
        row["oracle"] = oracle[static_cast<std::size_t>(i)];
        csv << "," << oracle[static_cast<std::size_t>(i)];
        if (oracle[static_cast<std::size_t>(i)] != d) ok = false;
      }
      csv << "\n";
      rows.push_back(row);
    }
    if (config.format == "json")
      emit(config, out, Json{{"space", config.space.tag()}, {"rows", rows}}.dump() + "\n");
    else
      emit(config, out, csv.str());
    if (!ok) err << "oracle and closed form disagree\n";
    return ok ? kExitOk : kExitVerifyFailed;
  }, err);
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return wrap([&] {
    std::vector<ModeBasis> bases;
    if (!config.in.empty()) {
      bases = load_bases(config.in);
    } else {
      check_range(config);
      for (int k = config.k_lo; k <= config.k_hi; ++k) bases.push_back({config.space, k, 0, {}, {}, 0});
    }
    if (config.oracle)
      for (const auto& b : bases)
        if (b.k > kOracleBound) throw LimitExceeded("oracle bound is k <= " + std::to_string(kOracleBound));
    VerifyOptions opts{config.full_group, config.oracle, config.orthogonality};
    const bool from_file = !config.in.empty();
    auto reports = parallel_map<VerificationReport>(static_cast<int>(bases.size()), [&](int i) {
      const ModeBasis& b = bases[static_cast<std::size_t>(i)];
      if (from_file) return verify_basis(b.space, b.k, b.basis, opts);
      ModeBasis mb = full_basis(b.space, b.k, config.normalization);
      return verify_basis(mb.space, mb.k, mb.basis, opts);
    });
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
      ok = ok && r.overall();
      arr.push_back(to_json(r));
    }
    emit(config, out, Json{{"overall", ok}, {"reports", arr}}.dump(2) + "\n");
    if (!ok) err << "verification failed\n";
    return ok ? kExitOk : kExitVerifyFailed;
  }, err);
}

int run_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return wrap([&] {
    if (config.points.empty()) throw std::invalid_argument("eval needs --points");
    ModeBasis mb;
    if (!config.in.empty()) {
      auto bases = load_bases(config.in);
      if (bases.size() != 1) throw std::invalid_argument("eval needs a single basis document");
      mb = std::move(bases.front());
    } else {
      check_range(config);
      if (config.k_lo != config.k_hi) throw std::invalid_argument("eval takes a single k");
      mb = full_basis(config.space, config.k_lo, config.normalization);
    }
    std::vector<std::pair<std::complex<double>, std::complex<double>>> pts;
    std::istringstream lines(read_file(config.points));
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ls(line);
      double v[4];
      std::string extra;
      if (!(ls >> v[0] >> v[1] >> v[2] >> v[3]) || (ls >> extra))
        throw std::invalid_argument("points line " + std::to_string(lineno) + ": expected four numbers");
      std::complex<double> a(v[0], v[1]), b(v[2], v[3]);
      double norm = std::sqrt(std::norm(a) + std::norm(b));
      if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("points line " + std::to_string(lineno) + ": not a unit vector");
      pts.emplace_back(a, b);
    }
    Json values = Json::array();
    for (const auto& f : mb.basis) {
      Json row = Json::array();
      for (const auto& [a, b] : pts) {
        auto v = evaluate(f, a, b);
        row.push_back(Json::array({v.real(), v.imag()}));
      }
      values.push_back(row);
    }
    Json doc{{"space", mb.space.tag()}, {"k", mb.k}, {"points", pts.size()}, {"values", values}};
    emit(config, out, doc.dump() + "\n");
    return kExitOk;
  }, err);
}

int run_group(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return wrap([&] {
    emit(config, out, to_json(standard_group(config.space)).dump(2) + "\n");
    return kExitOk;
  }, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenmodes of the Laplacian on spherical 3-manifolds"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string space = "S3", norm = "primitive";
  int p = 0, m = 0;
  std::vector<int> ks;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", space, "S3, L (lens), D (dihedral), T, O or I")
        ->check(CLI::IsMember({"S3", "L", "D", "T", "O", "I"}));
    sub->add_option("--p", p, "lens parameter p");
    sub->add_option("--m", m, "dihedral parameter m");
  };
  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", ks, "wavenumber, or inclusive range lo hi")->expected(1, 2);
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--normalization", norm, "primitive or conjugate-paired")
        ->check(CLI::IsMember({"primitive", "conjugate-paired"}));
  };

  auto* gen = app.add_subcommand("generate", "emit the mode basis as JSON");
  add_space(gen);
  add_k(gen, true);
  add_common(gen);

  auto* dims = app.add_subcommand("dims", "tabulate closed-form dimensions");
  add_space(dims);
  add_k(dims, true);
  dims->add_option("--out", cfg.out, "output file (default: stdout)");
  dims->add_flag("--oracle", cfg.oracle, "also run the brute-force invariant oracle");
  dims->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* ver = app.add_subcommand("verify", "check invariance, harmonicity, eigenvalue and rank");
  add_space(ver);
  add_k(ver, false);
  add_common(ver);
  ver->add_option("--in", cfg.in, "basis document written by generate");
  ver->add_flag("--full-group", cfg.full_group, "test invariance under every group element");
  ver->add_flag("--oracle", cfg.oracle, "compare against the brute-force invariant oracle");
  ver->add_flag("--orthogonality", cfg.orthogonality, "check distinct-twist orthogonality");

  auto* ev = app.add_subcommand("eval", "evaluate the basis at points of S^3");
  add_space(ev);
  add_k(ev, false);
  add_common(ev);
  ev->add_option("--in", cfg.in, "basis document written by generate");
  ev->add_option("--points", cfg.points, "file with lines: Re a  Im a  Re b  Im b")->required();

  auto* grp = app.add_subcommand("group", "dump the group elements as JSON");
  add_space(grp);
  grp->add_option("--out", cfg.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    int param = space == "L" ? p : space == "D" ? m : 0;
    if ((space == "L" && p < 1) || (space == "D" && m < 1))
      throw std::invalid_argument("--space " + space + " needs --" + (space == "L" ? "p" : "m") + " >= 1");
    cfg.space = Space::parse(space, param);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (!ks.empty()) {
    cfg.k_lo = ks[0];
    cfg.k_hi = ks.size() > 1 ? ks[1] : ks[0];
  } else if (cfg.in.empty() && (cfg.command == "verify" || cfg.command == "eval")) {
    err << "error: --k or --in is required\n";
    return kExitBadInput;
  }
  cfg.normalization = norm == "conjugate-paired" ? Normalization::ConjugatePaired : Normalization::Primitive;

  if (cfg.command == "generate") return run_generate(cfg, out, err);
  if (cfg.command == "dims") return run_dims(cfg, out, err);
  if (cfg.command == "verify") return run_verify(cfg, out, err);
  if (cfg.command == "eval") return run_eval(cfg, out, err);
  return run_group(cfg, out, err);
}

}  // namespace harmonia
