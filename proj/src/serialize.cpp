#include "braidlab/serialize.hpp"

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

using move::CyclicShift;
using move::DeleteGenerator;
using move::FreeReduce;
using move::InsertGenerator;
using move::Relation;

constexpr const char* kHashAlg = "fnv1a64";

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json as_json(const Rational& r) { return r.str(); }

Json as_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = big(c);
  return out;
}

Json as_json(const PiecewiseLinear& f) {
  Json segs = Json::array();
  for (const auto& s : f.segments()) {
    segs.push_back(Json{{"from", as_json(s.from)},
                        {"to", as_json(s.to)},
                        {"slope", as_json(s.line.slope)},
                        {"intercept", as_json(s.line.intercept)}});
  }
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(as_json(b));
  return Json{{"domain", Json::array({as_json(f.lower()), as_json(f.upper())})}, {"breakpoints", bps}, {"segments", segs}};
}

Json as_json(const BraidWord& w) { return Json{{"strands", w.strands()}, {"letters", w.letters()}}; }

Json as_json(const BraidMove& mv) {
  return std::visit(
      [](const auto& m) -> Json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FreeReduce>) {
          return Json{{"type", "free_reduce"}, {"pos", m.position}, {"letter", m.letter}, {"op", m.insert ? "insert" : "remove"}};
        } else if constexpr (std::is_same_v<M, Relation>) {
          return Json{{"type", "relation"}, {"pos", m.position}, {"form", m.form == Relation::Form::Long ? "long" : "commuting"}};
        } else if constexpr (std::is_same_v<M, CyclicShift>) {
          return Json{{"type", "cyclic_shift"},
                      {"dir", m.direction == CyclicShift::Direction::FrontToBack ? "front_to_back" : "back_to_front"}};
        } else if constexpr (std::is_same_v<M, InsertGenerator>) {
          return Json{{"type", "insert"}, {"pos", m.position}, {"index", m.index}};
        } else {
          return Json{{"type", "delete"}, {"pos", m.position}};
        }
      },
      mv);
}

Json as_json(const ClosureFingerprint& fp) {
  Json j{{"components", fp.components}, {"exponent_sum", fp.exponent_sum}, {"strands", fp.strands}};
  if (fp.bennequin_chi) j["bennequin_chi"] = *fp.bennequin_chi;
  j["alexander"] = fp.alexander ? as_json(*fp.alexander) : Json(nullptr);
  return j;
}

Json as_json(const DistanceResult& d) {
  Json legs = Json::array();
  for (const auto& l : d.witness) {
    legs.push_back(Json{{"from", l.from}, {"to", l.to}, {"genus", as_json(l.genus)}, {"euler_characteristic", l.euler_characteristic}});
  }
  return Json{{"distance", d.distance},
              {"tau_gap", d.tau_gap},
              {"upsilon_gap", d.upsilon_gap},
              {"achieved_by", d.achieved_by},
              {"witness", legs}};
}

Json as_json(const TorusClaim& c) {
  Json j{{"p", c.p}, {"q", c.q}};
  if (c.unknots > 0) j["unknots"] = c.unknots;
  return j;
}

Json as_json(const AdjacencyCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json step{{"move", as_json(s.move)}, {"hash", hash_hex(s.hash)}};
    if (s.checkpoint) step["word"] = as_json(*s.checkpoint);
    steps.push_back(std::move(step));
  }
  Json params = Json::object();
  for (const auto& [k, v] : cert.params) params[k] = v;
  Json meta{{"construction", cert.construction}, {"params", params}, {"achieved_n", cert.achieved_n}};
  if (!cert.achieved.empty()) meta["achieved"] = cert.achieved;
  return Json{{"version", cert.version},
              {"hash_alg", kHashAlg},
              {"strands", cert.strands},
              {"source", as_json(cert.source)},
              {"target", as_json(cert.target)},
              {"initial_word", as_json(cert.initial_word)},
              {"steps", steps},
              {"metadata", meta}};
}

Json as_json(const Verdict& v) {
  switch (v.status) {
    case Verdict::Status::Valid:
      return Json{{"status", "Valid"}};
    case Verdict::Status::InvalidStep:
      return Json{{"status", "InvalidStep"}, {"step", v.step_index}, {"reason", v.reason}};
    case Verdict::Status::EndpointMismatch:
      return Json{{"status", "EndpointMismatch"}, {"which", v.which}, {"expected", v.expected}, {"found", v.found}};
  }
  return {};
}

std::string certificate_text(const AdjacencyCertificate& cert) {
  const Json j = as_json(cert);
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + Json(key).dump() + ": ";
    if (key == "steps" && !value.empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

BraidWord word_from_json(const Json& j) {
  return BraidWord(get<int>(j, "strands"), get<std::vector<int>>(j, "letters"));
}

BraidMove move_from_json(const Json& j) {
  const auto type = get<std::string>(j, "type");
  if (type == "relation") {
    const auto form = get<std::string>(j, "form");
    if (form != "long" && form != "commuting") throw Error(ErrorCode::ParseError, "unknown relation form '" + form + "'");
    return Relation{get<std::size_t>(j, "pos"), form == "long" ? Relation::Form::Long : Relation::Form::Commuting};
  }
  if (type == "free_reduce") {
    const auto op = get<std::string>(j, "op");
    if (op != "insert" && op != "remove") throw Error(ErrorCode::ParseError, "unknown free_reduce op '" + op + "'");
    return FreeReduce{get<std::size_t>(j, "pos"), get<int>(j, "letter"), op == "insert"};
  }
  if (type == "cyclic_shift") {
    const auto dir = get<std::string>(j, "dir");
    if (dir == "front_to_back") return CyclicShift{CyclicShift::Direction::FrontToBack};
    if (dir == "back_to_front") return CyclicShift{CyclicShift::Direction::BackToFront};
    throw Error(ErrorCode::ParseError, "unknown cyclic_shift direction '" + dir + "'");
  }
  if (type == "insert") return InsertGenerator{get<std::size_t>(j, "pos"), get<int>(j, "index")};
  if (type == "delete") return DeleteGenerator{get<std::size_t>(j, "pos")};
  throw Error(ErrorCode::ParseError, "unknown move type '" + type + "'");
}

TorusClaim claim_from_json(const Json& j) {
  TorusClaim c{get<int>(j, "p"), get<int>(j, "q"), 0};
  if (j.contains("unknots")) c.unknots = get<int>(j, "unknots");
  return c;
}

AdjacencyCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "certificate must be a JSON object");
  if (j.contains("hash_alg") && get<std::string>(j, "hash_alg") != kHashAlg) {
    throw Error(ErrorCode::ParseError, "unsupported hash_alg '" + get<std::string>(j, "hash_alg") + "'");
  }
  AdjacencyCertificate c;
  c.version = get<int>(j, "version");
  c.strands = get<int>(j, "strands");
  c.source = claim_from_json(j.at("source"));
  c.target = claim_from_json(j.at("target"));
  c.initial_word = word_from_json(j.at("initial_word"));
  const auto& steps = j.at("steps");
  if (!steps.is_array()) throw Error(ErrorCode::ParseError, "steps must be an array");
  for (const auto& s : steps) {
    CertificateStep step{move_from_json(s.at("move")), parse_hash_hex(get<std::string>(s, "hash")), std::nullopt};
    if (s.contains("word")) step.checkpoint = word_from_json(s.at("word"));
    c.steps.push_back(std::move(step));
  }
  if (j.contains("metadata")) {
    const auto& meta = j.at("metadata");
    c.construction = get<std::string>(meta, "construction");
    if (meta.contains("params")) {
      for (const auto& [k, v] : meta.at("params").items()) {
        if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "parameter '" + k + "' must be an integer");
        c.params[k] = v.get<std::int64_t>();
      }
    }
    if (meta.contains("achieved_n")) c.achieved_n = get<std::int64_t>(meta, "achieved_n");
    if (meta.contains("achieved")) c.achieved = get<std::string>(meta, "achieved");
  }
  return c;
}

AdjacencyCertificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    return certificate_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace braidlab
