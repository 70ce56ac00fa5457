#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "coinv/bv.hpp"
#include "coinv/example_systems.hpp"
#include "coinv/morphism.hpp"
#include "coinv/presentation.hpp"
#include "coinv/zlinalg.hpp"

namespace coinv::cli {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string RunReport::digest() const {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(command + '\n' + inputs);
  return out.str();
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs_digest"] = digest();
  j["result"] = result;
  j["exit_status"] = exit_status;
  return j;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

namespace {

Json factors_json(const InvariantFactors& f) {
  Json arr = Json::array();
  for (const Integer& d : f) arr.push_back(d.get_str());
  return arr;
}

// Group literals in human output use the same form as the input ("2,2").
std::string group_line(const FinAbGroup& g) { return "group: " + g.to_string(); }

void add_torsion_verdict(RunReport& r, const CokernelInvariants& computed, const InvariantFactors& predicted) {
  bool match = computed.torsion_factors == predicted;
  r.result["computed"] = {{"free_rank", computed.free_rank}, {"torsion", factors_json(computed.torsion_factors)}};
  r.result["predicted"] = factors_json(predicted);
  r.result["verdict"] = match ? "MATCH" : "MISMATCH";
  r.lines.push_back("computed: free " + std::to_string(computed.free_rank) + ", torsion " +
                    to_string(computed.torsion_factors));
  r.lines.push_back("predicted: " + to_string(predicted));
  r.lines.push_back(match ? "MATCH" : "MISMATCH");
  if (!match) r.exit_status = 1;
}

std::vector<std::int64_t> parse_digits(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad digit list '" + text + "'");
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

RunReport cmd_predict(const std::string& group) {
  RunReport r;
  r.command = "predict --group " + group;
  FinAbGroup g = FinAbGroup::parse(group);
  InvariantFactors t = predicted_torsion(g);
  r.inputs = g.to_string();
  r.result["group"] = g.to_string();
  r.result["torsion"] = factors_json(t);
  r.lines.push_back("torsion: " + to_string(t));
  return r;
}

RunReport cmd_torsion(const TorsionArgs& args) {
  RunReport r;
  r.command = "torsion";
  CocycleData data = [&] {
    if (!args.fixture.empty()) {
      if (args.random) throw std::invalid_argument("--fixture and --random are exclusive");
      std::string text = read_input(args.fixture);
      r.command += " --fixture " + args.fixture;
      r.inputs = text;
      CocycleData d = parse_cocycle_fixture(text);
      if (!args.group.empty() && !(FinAbGroup::parse(args.group) == d.group()))
        throw std::invalid_argument("--group " + args.group + " disagrees with fixture group " +
                                    d.group().to_string());
      return d;
    }
    if (args.group.empty()) throw std::invalid_argument("torsion needs --group or --fixture");
    FinAbGroup g = FinAbGroup::parse(args.group);
    r.command += " --group " + args.group;
    if (args.random) {
      r.command += " --random --seed " + std::to_string(args.seed);
      std::mt19937_64 rng(args.seed);
      CocycleData d = random_cocycle_data(g, args.max_labels, rng);
      r.inputs = format_cocycle_fixture(d);
      return d;
    }
    CocycleData d = CocycleData::standard(g);
    r.inputs = format_cocycle_fixture(d);
    return d;
  }();
  r.result["group"] = data.group().to_string();
  r.result["data"] = format_cocycle_fixture(data);
  r.lines.push_back(group_line(data.group()));
  r.lines.push_back("|A| = " + std::to_string(data.a_count()) + ", |B| = " + std::to_string(data.b_count()));
  add_torsion_verdict(r, torsion_of_N(data), predicted_torsion(data.group()));
  return r;
}

RunReport cmd_skew(const SkewArgs& args) {
  RunReport r;
  r.command = "skew";
  std::optional<std::pair<OrderedBVDiagram, OrderedBVDiagram>> pair;
  if (!args.pair.empty()) {
    if (!args.x.empty() || !args.y.empty()) throw std::invalid_argument("--pair excludes --x and --y");
    std::string text = read_input(args.pair);
    r.command += " --pair " + args.pair;
    pair.emplace(parse_diagram_pair(text));
  } else {
    if (args.x.empty() || args.y.empty()) throw std::invalid_argument("skew needs --x and --y, or --pair");
    r.command += " --x " + args.x + " --y " + args.y;
    pair.emplace(parse_diagram(read_input(args.x)), parse_diagram(read_input(args.y)));
  }
  const auto& [x, y] = *pair;
  r.inputs = serialize_diagram_pair(x, y);
  if (!(x.group() == y.group()))
    throw std::invalid_argument("diagrams over different groups: " + x.group().to_string() + " vs " +
                                y.group().to_string());
  std::size_t levels = args.levels.value_or(std::min(x.level_count(), y.level_count()));
  r.command += " --levels " + std::to_string(levels);
  StabilizationReport s = torsion_stabilization(x, y, levels);

  r.result["group"] = s.group.to_string();
  r.result["predicted"] = factors_json(s.predicted);
  r.lines.push_back(group_line(s.group));
  r.lines.push_back("predicted: " + to_string(s.predicted));
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-6s %-9s %-9s %-6s %-12s %-12s %s", "level", "nondeg_x", "nondeg_y", "free",
                "torsion", "iso_to_next", "match");
  r.lines.push_back(buf);
  Json stages = Json::array();
  bool any_error = false;
  for (const StageReport& st : s.stages) {
    Json js;
    js["level"] = st.level;
    js["nondegenerate_x"] = st.nondegenerate_x;
    js["nondegenerate_y"] = st.nondegenerate_y;
    js["free_rank"] = st.free_rank ? Json(*st.free_rank) : Json(nullptr);
    js["torsion"] = st.torsion ? factors_json(*st.torsion) : Json(nullptr);
    js["iso_to_next"] = st.iso_to_next ? Json(*st.iso_to_next) : Json(nullptr);
    js["matches_predicted"] = st.matches_predicted;
    if (!st.error.empty()) js["error"] = st.error;
    stages.push_back(js);
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    std::snprintf(buf, sizeof buf, "%-6zu %-9s %-9s %-6s %-12s %-12s %s", st.level, yes_no(st.nondegenerate_x),
                  yes_no(st.nondegenerate_y), st.free_rank ? std::to_string(*st.free_rank).c_str() : "-",
                  st.torsion ? to_string(*st.torsion).c_str() : "-",
                  st.iso_to_next ? yes_no(*st.iso_to_next) : "-", yes_no(st.matches_predicted));
    r.lines.push_back(buf);
    if (!st.error.empty()) {
      any_error = true;
      r.lines.push_back("  error: " + st.error);
    }
  }
  r.result["stages"] = stages;
  r.result["assumptions"] = s.assumptions;
  for (const std::string& a : s.assumptions) r.lines.push_back("assumption: " + a);
  r.result["verdict"] = s.verdict ? "MATCH" : "MISMATCH";
  r.lines.push_back(std::string("verdict: ") + (s.verdict ? "MATCH" : "MISMATCH"));
  if (!s.verdict || any_error) r.exit_status = 1;
  return r;
}

RunReport cmd_snf(const std::string& path) {
  RunReport r;
  r.command = "snf " + path;
  std::string text = read_input(path);
  IntMatrix a = parse_int_matrix(text);
  r.inputs = a.to_string();
  SNFResult s = smith_normal_form(a);
  CokernelInvariants inv = cokernel_invariants(a);
  Json diag = Json::array();
  std::string line = "S:";
  for (const Integer& d : s.diagonal()) {
    diag.push_back(d.get_str());
    line += " " + d.get_str();
  }
  r.result["rows"] = a.rows();
  r.result["cols"] = a.cols();
  r.result["diagonal"] = diag;
  r.result["cokernel"] = {{"free_rank", inv.free_rank}, {"torsion", factors_json(inv.torsion_factors)}};
  r.lines.push_back(line);
  r.lines.push_back("coker: free " + std::to_string(inv.free_rank) + ", torsion " + to_string(inv.torsion_factors));
  return r;
}

RunReport cmd_example(const ExampleArgs& args) {
  RunReport r;
  r.command = "example " + args.name + " --levels " + std::to_string(args.levels);
  std::string text;
  if (args.name == "octagonal") {
    auto [x, y] = octagonal_pair(args.levels);
    if (!args.x.empty() || !args.y.empty()) {
      if (args.x.empty() || args.y.empty()) throw std::invalid_argument("give both --x and --y, or neither");
      write_file(args.x, serialize_diagram(x));
      write_file(args.y, serialize_diagram(y));
      r.lines.push_back("wrote " + args.x + " and " + args.y);
    }
    text = serialize_diagram_pair(x, y);
  } else if (args.name == "rotation") {
    FinAbGroup g = FinAbGroup::parse(args.group);
    r.command += " --digits " + args.digits + " --group " + args.group;
    OrderedBVDiagram d = rotation_diagram(RotationSpec{parse_digits(args.digits), args.levels},
                                          parse_element(g, args.long_label), parse_element(g, args.short_label));
    text = serialize_diagram(d);
    if (!args.x.empty()) {
      write_file(args.x, text);
      r.lines.push_back("wrote " + args.x);
    }
  } else {
    throw std::invalid_argument("unknown example '" + args.name + "' (octagonal, rotation)");
  }
  r.inputs = text;
  r.result["diagrams"] = Json::parse(text);
  if (r.lines.empty()) {
    if (!text.empty() && text.back() == '\n') text.pop_back();
    r.lines.push_back(text);
  }
  return r;
}

RunReport cmd_classify(const ClassifyArgs& args) {
  RunReport r;
  r.command = "classify --element " + args.element;
  CocycleData data = [&] {
    if (!args.fixture.empty()) {
      r.command += " --fixture " + args.fixture;
      return parse_cocycle_fixture(read_input(args.fixture));
    }
    if (args.group.empty()) throw std::invalid_argument("classify needs --group or --fixture");
    r.command += " --group " + args.group;
    return CocycleData::standard(FinAbGroup::parse(args.group));
  }();
  const FinAbGroup& g = data.group();
  if (g.is_trivial()) throw std::invalid_argument("classification needs a nontrivial group");

  // Element file: one block per line, "a b : ring element".
  std::string text = read_input(args.element);
  ModuleBasis basis{g.order(), data.a_count(), data.b_count()};
  std::vector<std::vector<RingElt>> blocks(data.a_count(), std::vector<RingElt>(data.b_count(), RingElt(g)));
  auto label_index = [](const std::vector<std::string>& labels, const std::string& name, const char* family) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return i;
    throw std::invalid_argument(std::string("unknown ") + family + " label '" + name + "'");
  };
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("element line " + std::to_string(line_no) + ": expected 'a b : element'");
    std::istringstream head(line.substr(0, colon));
    std::string a, b, extra;
    if (!(head >> a >> b) || (head >> extra))
      throw std::invalid_argument("element line " + std::to_string(line_no) + ": expected two labels before ':'");
    std::size_t ai = label_index(data.a_labels(), a, "A"), bi = label_index(data.b_labels(), b, "B");
    RingElt e = RingElt::parse(g, line.substr(colon + 1));
    if (!e.is_integral())
      throw std::invalid_argument("element line " + std::to_string(line_no) + ": coefficients must be integers");
    blocks[ai][bi] += e;
  }
  IntVector v = basis.assemble(blocks);
  r.inputs = format_cocycle_fixture(data) + text;

  if (!data.is_standard()) {
    TransferMap to_standard = build_transfer(data, CocycleData::standard(g));
    v = apply_transfer(to_standard, v);
    r.lines.push_back("mapped to standard data by the transfer map");
  }
  TorsionResidues res = torsion_class_invariant(g, v);
  r.result["group"] = g.to_string();
  r.lines.push_back(group_line(g));
  Json entries = Json::array();
  for (std::size_t k = 0; k < res.pairs.size(); ++k) {
    auto [i, j] = res.pairs[k];
    entries.push_back({{"i", i + 1}, {"j", j + 1}, {"modulus", res.moduli[k].get_str()},
                       {"residue", res.residues[k].get_str()}});
    r.lines.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") mod " + res.moduli[k].get_str() +
                      ": " + res.residues[k].get_str());
  }
  r.result["residues"] = entries;
  return r;
}

}  // namespace coinv::cli
