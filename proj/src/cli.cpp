#include "braidlab/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "braidlab/error.hpp"
#include "braidlab/serialize.hpp"

namespace braidlab::cli {

namespace {

namespace fs = std::filesystem;

// Integers print without the "/1".
std::string fmt(const Rational& r) {
  auto s = r.str();
  if (s.size() > 2 && s.ends_with("/1")) s.resize(s.size() - 2);
  return s;
}

struct Style {
  bool color = false;
  std::string good(const std::string& s) const { return color ? "\x1b[32m" + s + "\x1b[0m" : s; }
  std::string bad(const std::string& s) const { return color ? "\x1b[31m" + s + "\x1b[0m" : s; }
};

TorusKnotId knot_arg(const std::string& text) { return TorusKnotId::parse(text); }

void check_pq(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "p and q must be positive");
}

PiecewiseLinear negated(const PiecewiseLinear& f) {
  std::vector<Segment> segs = f.segments();
  for (auto& s : segs) s.line = Line{-s.line.slope, -s.line.intercept};
  return PiecewiseLinear(std::move(segs));
}

int cmd_invariants(int p, int q, bool mirror, bool json, std::ostream& out) {
  check_pq(p, q);
  const auto k = TorusKnotId::make(p, q, mirror ? -1 : 1);
  const auto delta = alexander_torus(p, q);
  if (json) {
    out << Json{{"knot", k.str()},
                {"genus", genus(k)},
                {"tau", tau(k)},
                {"upsilon", upsilon(k)},
                {"alexander", as_json(delta)}}
               .dump(2)
        << "\n";
  } else {
    out << "knot       " << k.str() << "\n"
        << "genus      " << genus(k) << "\n"
        << "tau        " << tau(k) << "\n"
        << "upsilon    " << upsilon(k) << "\n"
        << "alexander  " << delta.str() << "\n";
  }
  return kOk;
}

int cmd_upsilon(int p, int q, bool mirror, int samples, bool json, std::ostream& out) {
  check_pq(p, q);
  const auto k = TorusKnotId::make(p, q, mirror ? -1 : 1);
  auto f = k.is_unknot() ? upsilon_function(1, 1) : upsilon_function(k.p(), k.q());
  if (k.sign() < 0) f = negated(f);
  if (samples > 0) {
    Json rows = Json::array();
    for (int i = 0; i <= samples; ++i) {
      const Rational t(2 * i, samples);
      if (json) {
        rows.push_back(Json::array({as_json(t), as_json(f.eval(t))}));
      } else {
        out << fmt(t) << "\t" << fmt(f.eval(t)) << "\n";
      }
    }
    if (json) out << Json{{"knot", k.str()}, {"samples", rows}}.dump(2) << "\n";
    return kOk;
  }
  if (json) {
    Json j = as_json(f);
    j["knot"] = k.str();
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "knot " << k.str() << "\n";
  out << "breakpoints";
  for (const auto& b : f.breakpoints()) out << " " << fmt(b);
  out << "\n";
  for (const auto& s : f.segments()) {
    out << "[" << fmt(s.from) << ", " << fmt(s.to) << "]  " << fmt(s.line.slope) << " t";
    if (s.line.intercept != Rational(0)) {
      out << (s.line.intercept < Rational(0) ? " - " : " + ");
      out << fmt(s.line.intercept < Rational(0) ? -s.line.intercept : s.line.intercept);
    }
    out << "\n";
  }
  return kOk;
}

int cmd_distance(const std::string& a, const std::string& b, std::ostream& out) {
  out << as_json(distance(knot_arg(a), knot_arg(b))).dump(2) << "\n";
  return kOk;
}

struct AdjacencyArgs {
  std::string construction;
  int n = 0, m = 0, a = 0, b = 0;
  std::string out_path;
};

AdjacencyCertificate build(const AdjacencyArgs& args) {
  const auto& c = args.construction;
  if (c == "grid") return adj_grid(args.n, args.m, args.a, args.b);
  if (args.m < 2) throw Error(ErrorCode::InvalidArgument, "--m must be at least 2");
  if (c == "index3") return adj_index3(args.m);
  if (c == "index4") return adj_index4(args.m);
  if (c == "square") return adj_square(args.m);
  return adj_staircase(args.m);
}

int cmd_adjacency(const AdjacencyArgs& args, bool json, std::ostream& out) {
  const auto cert = build(args);
  const auto text = certificate_text(cert);
  if (args.out_path.empty() || args.out_path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(args.out_path, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::InvalidArgument, "cannot write '" + args.out_path + "'");
  Json summary{{"file", args.out_path},
               {"construction", cert.construction},
               {"target", cert.target.str()},
               {"source", cert.source.str()},
               {"steps", cert.steps.size()},
               {"deletions", cert.deletions()},
               {"achieved_n", cert.achieved_n}};
  if (json) {
    out << summary.dump(2) << "\n";
  } else {
    out << "wrote " << args.out_path << ": " << cert.target.str() << " -> " << cert.source.str() << ", "
        << cert.steps.size() << " steps, " << cert.deletions() << " deletions\n";
  }
  return kOk;
}

// Outcome for one file: a verdict, or the reason it could not be read.
struct FileResult {
  std::optional<Verdict> verdict;
  std::string error;

  bool ok() const { return verdict && verdict->valid(); }
  std::string str() const { return verdict ? verdict->str() : "Malformed: " + error; }
  Json json() const { return verdict ? as_json(*verdict) : Json{{"status", "Malformed"}, {"reason", error}}; }
};

FileResult verify_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {std::nullopt, "cannot open " + path.string()};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return {verify(parse_certificate(buf.str())), {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

int cmd_verify(const std::string& file, const std::string& batch, bool json, const Style& style, std::ostream& out) {
  auto line = [&](const FileResult& r) { return r.ok() ? style.good(r.str()) : style.bad(r.str()); };
  if (batch.empty()) {
    const auto r = verify_file(file);
    if (json) {
      out << r.json().dump(2) << "\n";
    } else {
      out << line(r) << "\n";
    }
    return r.ok() ? kOk : kVerificationFailed;
  }
  if (!fs::is_directory(batch)) throw Error(ErrorCode::InvalidArgument, "'" + batch + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(batch)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<FileResult> results(files.size());
  std::atomic<std::size_t> next{0};
  {
    const auto workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, files.size() + 1);
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < files.size();) results[i] = verify_file(files[i]);
      });
    }
  }
  bool all = true;
  Json rows = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto& r = results[i];
    all = all && r.ok();
    const auto name = files[i].filename().string();
    if (json) {
      Json row{{"file", name}};
      const Json verdict = r.json();
      for (const auto& [k, val] : verdict.items()) row[k] = val;
      rows.push_back(std::move(row));
    } else {
      out << name << ": " << line(r) << "\n";
    }
  }
  if (json) out << rows.dump(2) << "\n";
  return all ? kOk : kVerificationFailed;
}

int cmd_render(const std::string& literal, bool json, std::ostream& out) {
  const auto w = BraidWord::parse(literal);
  const auto fence = fence_render(w);
  if (json) {
    Json j = as_json(w);
    j["fence"] = fence;
    out << j.dump(2) << "\n";
  } else {
    out << fence;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concordance invariants and subword-adjacency certificates for torus knots", "braidlab"};
  app.require_subcommand(1, 1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  int p = 0, q = 0, samples = 0;
  bool mirror = false, breakpoints = false;
  auto* inv = app.add_subcommand("invariants", "Genus, tau, upsilon and Alexander polynomial of T(p,q)");
  inv->add_option("P", p)->required();
  inv->add_option("Q", q)->required();
  inv->add_flag("--mirror", mirror, "Use the mirror image");

  auto* ups = app.add_subcommand("upsilon", "The Upsilon function of T(p,q) on [0,2]");
  ups->add_option("P", p)->required();
  ups->add_option("Q", q)->required();
  ups->add_flag("--mirror", mirror, "Use the mirror image");
  auto* bp = ups->add_flag("--breakpoints", breakpoints, "Print exact piecewise-linear data (default)");
  ups->add_option("--samples", samples, "Evaluate at N+1 equally spaced points")->check(CLI::PositiveNumber)->excludes(bp);

  std::string ka, kb;
  auto* dist = app.add_subcommand("distance", "Cobordism distance; knots as p,q or -p,q for mirrors, or unknot");
  dist->add_option("K", ka)->required();
  dist->add_option("T", kb)->required();

  AdjacencyArgs adj;
  auto* adjc = app.add_subcommand("adjacency", "Emit a subword-adjacency certificate");
  adjc->add_option("construction", adj.construction)
      ->required()
      ->check(CLI::IsMember({"grid", "index3", "index4", "square", "staircase"}));
  adjc->add_option("--n", adj.n, "grid: strands of the smaller link");
  adjc->add_option("--m", adj.m, "grid: columns of the smaller link; others: the parameter m");
  adjc->add_option("--a", adj.a, "grid: strands of the larger link");
  adjc->add_option("--b", adj.b, "grid: columns of the larger link");
  adjc->add_option("-o,--output", adj.out_path, "Output file (default stdout)");

  std::string file, batch;
  auto* ver = app.add_subcommand("verify", "Replay and check a certificate");
  auto* file_opt = ver->add_option("file", file);
  auto* batch_opt = ver->add_option("--batch", batch, "Verify every *.json file in a directory");
  file_opt->excludes(batch_opt);

  std::string literal;
  auto* ren = app.add_subcommand("render", "Fence diagram of a positive word, e.g. \"s:3 w:1,2,1\"");
  ren->add_option("word", literal)->required();

  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << "\n";
    err << "Run with --help for usage.\n";
    return kUsage;
  };
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }
  if (*ver && file.empty() && batch.empty()) return usage("verify needs a file or --batch");
  if (*adjc && adj.construction == "grid" && (adj.n < 1 || adj.m < 1 || adj.a < 1 || adj.b < 1)) {
    return usage("grid needs positive --n, --m, --a and --b");
  }
  if (*adjc && adj.construction != "grid" && adj.m == 0) return usage("--m is required");

  const char* no_color = std::getenv("BRAIDLAB_NO_COLOR");
  Style style{&out == &std::cout && isatty(STDOUT_FILENO) && (no_color == nullptr || *no_color == '\0')};

  try {
    if (*inv) return cmd_invariants(p, q, mirror, json, out);
    if (*ups) return cmd_upsilon(p, q, mirror, samples, json, out);
    if (*dist) return cmd_distance(ka, kb, out);
    if (*adjc) return cmd_adjacency(adj, json, out);
    if (*ver) return cmd_verify(file, batch, json, style, out);
    if (*ren) return cmd_render(literal, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsage;
}

}  // namespace braidlab::cli
