// Copyright 2026 The dupcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dupcode/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dupcode/bounds.hpp"
#include "dupcode/correct.hpp"
#include "dupcode/detect.hpp"
#include "dupcode/error.hpp"
#include "dupcode/simulate.hpp"
#include "dupcode/transform.hpp"
#include "dupcode/verify.hpp"

namespace dupcode::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned q = 2;
  std::size_t k = 2;
  std::size_t n = 0;
  unsigned i = 0, j = 0;
  std::uint64_t l = 0;
  std::size_t r = 2;
  std::string construction;
  std::string zeta = std::string(to_string(kDefaultZetaReading));
  std::string format = "text";
  std::string in_path, out_path;
  std::vector<std::string> words;
  std::size_t cap = kDefaultEnumerationCap;
  // simulate
  std::size_t dups = 0;
  std::string noise = "none";
  std::uint64_t seed = 0;
  // bounds
  bool table = false;
  // verify
  std::string property;
  std::size_t tmax = 2;
  std::size_t tcap = 6;
};

std::string event_list(const EventTrace& t, json* events) {
  std::string out;
  for (const auto& e : t.events) {
    if (events) events->push_back(format_event(e));
    out += format_event(e) + "\n";
  }
  return out;
}

json trace_json(const EventTrace& t) {
  json events = json::array();
  event_list(t, &events);
  return {{"origin", t.origin.str()}, {"events", events}};
}

json rational_json(const BigRational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return {{"num", BigInt(numerator(v)).str()},
          {"den", BigInt(denominator(v)).str()},
          {"decimal", to_decimal(v)}};
}

class Command {
 public:
  Command(Options o, std::istream& in, std::ostream& out)
      : o_(std::move(o)), in_(in), out_(out) {}

  int transform() {
    for (const Word& x : inputs()) {
      const TransformPair t = phi(x, o_.k);
      if (json_out()) {
        emit(json{{"head", t.head.str()}, {"tail", t.tail.str()}});
      } else {
        out_ << t.str() << "\n";
      }
    }
    return kExitOk;
  }

  int root_cmd() {
    for (const Word& x : inputs()) {
      const Word r = root(x, o_.k);
      if (json_out()) {
        emit(json{{"word", x.str()},
                  {"root", r.str()},
                  {"irreducible", r == x}});
      } else {
        out_ << r.str() << "\n";
      }
    }
    return kExitOk;
  }

  int simulate_cmd() {
    const Noise noise = parse_noise(o_.noise);
    for (const Word& x : inputs()) {
      const auto [y, trace] = simulate(x, o_.k, o_.dups, noise, o_.seed);
      if (json_out()) {
        emit(json{{"input", x.str()},
                  {"output", y.str()},
                  {"trace", trace_json(trace)}});
      } else {
        out_ << y.str() << "\n" << trace.str();
      }
    }
    return kExitOk;
  }

  int enumerate_cmd() {
    const auto code = codewords();
    if (json_out()) {
      json words = json::array();
      for (const Word& c : code) words.push_back(c.str());
      emit(json{{"construction", o_.construction},
                {"count", code.size()},
                {"codewords", words}});
    } else {
      for (const Word& c : code) out_ << c.str() << "\n";
    }
    return kExitOk;
  }

  int encode_cmd() {
    for (const Word& payload : inputs()) {
      Word c;
      if (o_.construction == "ecc") {
        c = ecc().encode(payload);
      } else if (o_.construction == "w") {
        c = w_block_encode(payload, o_.k);
      } else if (o_.construction == "c3") {
        if (payload.size() < o_.k) {
          throw ParameterError("c3 payload is B (k symbols) followed by y");
        }
        c = construct3_encode(payload.slice(0, o_.k),
                              payload.slice(o_.k, payload.size() - o_.k), o_.k,
                              parse_zeta_reading(o_.zeta));
      } else {
        throw UsageError("construction '" + o_.construction +
                         "' has no encoder; use enumerate");
      }
      if (json_out()) {
        emit(json{{"payload", payload.str()}, {"codeword", c.str()}});
      } else {
        out_ << c.str() << "\n";
      }
    }
    return kExitOk;
  }

  int decode_cmd() {
    int status = kExitOk;
    std::optional<EccCode> code;
    const std::string& c = o_.construction;
    if (c == "ecc") {
      code = ecc();
    } else if (c != "w" && c != "irr" && c != "cij" && c != "cijl" &&
               c != "c3") {
      throw UsageError("construction '" + c + "' has no decoder");
    }
    for (const Word& y : inputs()) {
      EccDecodeReport rep;
      if (code) {
        rep = code->decode(y);
      } else if (c == "w") {
        rep.ok = true;
        rep.payload = w_block_decode(y, o_.k);
      } else {
        // Detection codes: the only candidate is the root of y.
        const Word r = root(y, o_.k);
        rep.dedup_steps = (y.size() - r.size()) / o_.k;
        if (member_of(r, r.size())) {
          rep.ok = true;
          if (c == "c3") {
            const auto [b, tail] = construct3_split(r, o_.k);
            rep.payload = b.concat(tail);
          } else {
            rep.payload = r;
          }
        }
      }
      if (!rep.ok) status = kExitCounterexample;
      if (json_out()) {
        json j{{"status", rep.ok ? "ok" : "error"}};
        if (rep.payload) j["payload"] = rep.payload->str();
        j["dedup_steps"] = rep.dedup_steps;
        if (rep.corrected_position) {
          j["corrected_position"] = *rep.corrected_position;
        }
        emit(j);
      } else if (rep.ok) {
        out_ << rep.payload->str() << "\n";
      } else {
        out_ << "error\n";
      }
    }
    return status;
  }

  /// Membership query: exit 0 for members, 2 otherwise.
  int member_cmd() {
    bool all = true;
    for (const Word& x : inputs()) {
      const bool m = member_of(x, x.size());
      all = all && m;
      json j{{"member", m}};
      if (x.size() >= o_.k) {
        const AuxResidues res = aux_residues(phi(x, o_.k).tail, o_.k);
        j["i"] = res.i;
        j["j"] = res.j;
      }
      if (json_out()) {
        emit(j);
      } else {
        out_ << (m ? "member" : "not a member") << "\n";
      }
    }
    return all ? kExitOk : kExitCounterexample;
  }

  int bounds_cmd() {
    if (o_.n < o_.k) throw ParameterError("bounds need --n >= --k");
    if (o_.table) {
      if (o_.format == "json") throw UsageError("--table emits CSV");
      out_ << "n,rll,irr,M,gv_lower,psquared_lower\n";
      for (std::size_t n = o_.k; n <= o_.n; ++n) {
        const BoundReport r = bound_report(o_.q, o_.k, n);
        out_ << n << "," << r.rll_counts[n] << "," << r.irr_count << ","
             << r.M << "," << (r.gv_lower ? to_decimal(*r.gv_lower) : "")
             << ","
             << (r.psquared_lower ? to_decimal(*r.psquared_lower) : "")
             << "\n";
      }
      return kExitOk;
    }
    if (o_.format == "csv") throw UsageError("csv output needs --table");
    const BoundReport r = bound_report(o_.q, o_.k, o_.n);
    json rll = json::array();
    for (const BigInt& v : r.rll_counts) rll.push_back(v.str());
    json j{{"q", r.q}, {"k", r.k}, {"n", r.n}, {"rll_counts", rll},
           {"irr_count", r.irr_count.str()}, {"M", r.M.str()}};
    j["gv_lower"] = r.gv_lower ? rational_json(*r.gv_lower) : json(nullptr);
    j["psquared_lower"] =
        r.psquared_lower ? rational_json(*r.psquared_lower) : json(nullptr);
    j["rates"] = json(r.rates);
    if (o_.format == "text") {
      out_ << "rll(" << r.n << ") = " << r.rll_counts.back() << "\n"
           << "irr(" << r.n << ") = " << r.irr_count << "\n"
           << "M = " << r.M << "\n";
      if (r.gv_lower) out_ << "gv_lower = " << to_decimal(*r.gv_lower) << "\n";
      if (r.psquared_lower) {
        out_ << "psquared_lower = " << to_decimal(*r.psquared_lower) << "\n";
      }
      for (const auto& [name, v] : r.rates) out_ << name << " = " << v << "\n";
    } else {
      emit(j);
    }
    return kExitOk;
  }

  int verify_cmd() {
    const VerifyProperty property = parse_property(o_.property);
    if (o_.construction.empty()) {
      switch (property) {
        case VerifyProperty::kDuplication: o_.construction = "irr"; break;
        case VerifyProperty::kOneNoisyDup: o_.construction = "cij"; break;
        case VerifyProperty::kOneSubDetect: o_.construction = "cijl"; break;
        case VerifyProperty::kOneSubCorrect: o_.construction = "ecc"; break;
      }
    }
    const auto code = codewords();
    VerifyOptions vo;
    vo.t_max = o_.tmax;
    vo.t_cap = std::max(o_.tmax, o_.tcap);
    vo.cap = o_.cap;
    VerifyReport r;
    switch (property) {
      case VerifyProperty::kDuplication:
        r = verify_duplication_code(code, o_.k);
        break;
      case VerifyProperty::kOneNoisyDup:
        r = verify_1nd(code, o_.k, vo);
        break;
      case VerifyProperty::kOneSubDetect:
        r = verify_1s_detect(code, o_.k, vo);
        break;
      case VerifyProperty::kOneSubCorrect: {
        Decoder dec;
        if (o_.construction == "ecc") {
          auto shared = std::make_shared<EccCode>(ecc());
          dec = [shared](const Word& y) -> std::optional<Word> {
            auto rep = shared->decode(y);
            if (!rep.ok) return std::nullopt;
            return shared->encode(*rep.payload);
          };
        }
        r = verify_1s_correct(code, o_.k, vo, dec);
        break;
      }
    }
    json params{{"construction", o_.construction}, {"q", o_.q}, {"k", o_.k},
                {"n", r.n}};
    if (o_.construction == "cij" || o_.construction == "cijl" ||
        o_.construction == "aux") {
      params["i"] = o_.i;
      params["j"] = o_.j;
    }
    if (o_.construction == "cijl") params["l"] = o_.l;
    if (o_.construction == "ecc") params["r"] = o_.r;
    json j{{"property", std::string(to_string(r.property))},
           {"params", params},
           {"t_max", o_.tmax},
           {"horizon", r.horizon},
           {"code_size", r.code_size},
           {"pairs_checked", r.pairs_checked},
           {"words_checked", r.words_checked},
           {"status", std::string(to_string(r.status))}};
    if (r.witness) {
      const Witness& w = *r.witness;
      json wj{{"kind", w.kind}, {"c1", w.c1.str()}};
      if (w.c2) wj["c2"] = w.c2->str();
      wj["collision"] = w.collision.str();
      wj["from_c1"] = trace_json(w.from_c1);
      if (w.from_c2) wj["from_c2"] = trace_json(*w.from_c2);
      wj["replays"] = w.replays(o_.k);
      j["witness"] = wj;
    }
    if (o_.format == "text") {
      out_ << to_string(r.property) << ": " << to_string(r.status)
           << " (code size " << r.code_size << ", horizon " << r.horizon
           << ")\n";
      if (r.witness) {
        out_ << "c1 " << r.witness->c1.str() << "\n";
        if (r.witness->c2) out_ << "c2 " << r.witness->c2->str() << "\n";
        out_ << "y  " << r.witness->collision.str() << "\n";
      }
    } else {
      emit(j);
    }
    switch (r.status) {
      case VerifyStatus::kCertified: return kExitOk;
      case VerifyStatus::kCounterexampleFound: return kExitCounterexample;
      case VerifyStatus::kHorizonInconclusive: return kExitInconclusive;
    }
    return kExitOk;
  }

 private:
  bool json_out() const { return o_.format == "json"; }

  void emit(const json& j) { out_ << j.dump() << "\n"; }

  AuxParams aux() const {
    if (o_.n == 0) throw UsageError("--n is required for this construction");
    AuxParams a{o_.q, o_.k, o_.n, o_.i, o_.j};
    a.validate();
    return a;
  }

  EccCode ecc() const { return EccCode::build(o_.q, o_.k, o_.r); }

  /// Membership in the selected code. Without --n the code length defaults
  /// to `fallback_n`.
  bool member_of(const Word& x, std::size_t fallback_n) const {
    const std::string& c = o_.construction;
    Options o = o_;
    if (o.n == 0) o.n = fallback_n;
    if (x.size() != o.n) return false;
    if (c == "ecc") return ecc().is_codeword(x);
    if (c == "w") return WBlockCode(o.q, o.k, o.n).decode(x).has_value();
    if (c == "irr") return is_irreducible(x, o.k);
    AuxParams a{o.q, o.k, o.n, o.i, o.j};
    a.validate();
    if (c == "aux") return detect_member(x, {DetectKind::kAux, a});
    if (c == "cij") return detect_member(x, {DetectKind::kCij, a});
    if (c == "c3") {
      return detect_member(x,
                           {DetectKind::kC3, a, parse_zeta_reading(o.zeta)});
    }
    if (c == "cijl") return cijl_member(x, a, o.l);
    throw UsageError("--construction is required");
  }

  std::vector<Word> codewords() const {
    const std::string& c = o_.construction;
    if (c == "irr") {
      if (o_.n == 0) throw UsageError("--n is required for irr");
      return enumerate_irreducible(o_.q, o_.k, o_.n, o_.cap);
    }
    if (c == "aux") return enumerate_code({DetectKind::kAux, aux()}, o_.cap);
    if (c == "cij") return enumerate_code({DetectKind::kCij, aux()}, o_.cap);
    if (c == "c3") {
      return enumerate_code(
          {DetectKind::kC3, aux(), parse_zeta_reading(o_.zeta)}, o_.cap);
    }
    if (c == "cijl") return enumerate_cijl(aux(), o_.l, o_.cap);
    if (c == "ecc") return ecc().codewords(o_.cap);
    if (c == "w") {
      if (o_.n == 0) throw UsageError("--n is required for w");
      const WBlockCode w(o_.q, o_.k, o_.n);
      if (w.size() > o_.cap) throw CapExceeded("W block code exceeds the cap");
      std::vector<Word> out;
      for (BigInt idx = 0; idx < w.size(); ++idx) {
        out.push_back(w.encode_index(idx));
      }
      return out;
    }
    throw UsageError("--construction is required (irr, aux, cij, c3, cijl, "
                     "ecc, w)");
  }

  std::vector<Word> inputs() const {
    std::vector<std::string> lines = o_.words;
    if (!o_.in_path.empty()) {
      if (!lines.empty()) throw UsageError("give words or --in, not both");
      std::ifstream file;
      std::istream* src = &in_;
      if (o_.in_path != "-") {
        file.open(o_.in_path);
        if (!file) throw UsageError("cannot read " + o_.in_path);
        src = &file;
      }
      std::string line;
      while (std::getline(*src, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
      }
    }
    if (lines.empty()) throw UsageError("no input word given");
    std::vector<Word> out;
    for (const auto& s : lines) out.push_back(Word::parse(s, o_.q));
    return out;
  }

  Options o_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Codes for tandem-duplication channels with one substitution"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok or certified, 1 usage error, 2 counterexample found "
      "(verify), detected error (decode) or non-member (member), 3 horizon inconclusive, 4 "
      "enumeration cap exceeded.");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "alphabet size")->capture_default_str();
    sub->add_option("--k", o.k, "duplication length")->capture_default_str();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", o.out_path, "write output to a file");
  };
  auto words = [&](CLI::App* sub) {
    sub->add_option("word", o.words, "input words (symbol text format)");
    sub->add_option("--in", o.in_path, "read words, one per line ('-' = stdin)");
  };
  auto code = [&](CLI::App* sub) {
    sub->add_option("--construction", o.construction,
                    "irr, aux, cij, c3, cijl, ecc or w")
        ->check(CLI::IsMember({"irr", "aux", "cij", "c3", "cijl", "ecc", "w"}));
    sub->add_option("--n", o.n, "code length");
    sub->add_option("--i", o.i, "first residue of C_{i,j}");
    sub->add_option("--j", o.j, "second residue of C_{i,j}");
    sub->add_option("--l", o.l, "Hamming coset index of C_{i,j,l}");
    sub->add_option("--r", o.r, "Hamming redundancy of the ecc code")
        ->capture_default_str();
    sub->add_option("--zeta", o.zeta, "zeta reading for c3")
        ->check(CLI::IsMember({"symbol", "transform", "tail-aligned"}))
        ->capture_default_str();
    sub->add_option("--cap", o.cap, "enumeration cap")->capture_default_str();
  };

  auto* transform = app.add_subcommand("transform", "print phi(x) as head,tail");
  common(transform);
  words(transform);
  auto* root_sub = app.add_subcommand("root", "print the duplication root");
  common(root_sub);
  words(root_sub);
  auto* sim = app.add_subcommand("simulate", "run the channel on a word");
  common(sim);
  words(sim);
  sim->add_option("--dups", o.dups, "number of duplications")
      ->capture_default_str();
  sim->add_option("--noise", o.noise, "none, restricted or unrestricted")
      ->check(CLI::IsMember({"none", "restricted", "unrestricted"}))
      ->capture_default_str();
  sim->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  auto* enumerate = app.add_subcommand("enumerate", "list codewords");
  common(enumerate);
  code(enumerate);
  auto* encode = app.add_subcommand("encode", "encode payloads (ecc, w, c3)");
  common(encode);
  code(encode);
  words(encode);
  auto* decode = app.add_subcommand("decode", "decode channel outputs");
  common(decode);
  code(decode);
  words(decode);
  auto* member = app.add_subcommand("member", "membership query");
  common(member);
  code(member);
  words(member);
  auto* bounds = app.add_subcommand("bounds", "counts and bounds");
  common(bounds);
  bounds->add_option("--n", o.n, "length")->required();
  bounds->add_flag("--table", o.table, "CSV rows for lengths k..n");
  auto* verify = app.add_subcommand("verify", "certify a code property");
  common(verify);
  code(verify);
  verify->add_option("--property", o.property, "dup, 1nd, 1s-detect or 1s-correct")
      ->required()
      ->check(CLI::IsMember({"dup", "1nd", "1s-detect", "1s-correct"}));
  verify->add_option("--tmax", o.tmax, "minimum closure horizon")
      ->capture_default_str();
  verify->add_option("--tcap", o.tcap, "horizon cap while roots still grow")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    if (o.format == "csv" && !bounds->parsed()) {
      throw UsageError("csv output is only available for bounds --table");
    }
    if (bounds->parsed() && o.table && o.format == "text") o.format = "csv";
    Command cmd(o, in, *sink);
    if (transform->parsed()) return cmd.transform();
    if (root_sub->parsed()) return cmd.root_cmd();
    if (sim->parsed()) return cmd.simulate_cmd();
    if (enumerate->parsed()) return cmd.enumerate_cmd();
    if (encode->parsed()) return cmd.encode_cmd();
    if (decode->parsed()) return cmd.decode_cmd();
    if (member->parsed()) return cmd.member_cmd();
    if (bounds->parsed()) return cmd.bounds_cmd();
    if (verify->parsed()) return cmd.verify_cmd();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dupcode::cli
