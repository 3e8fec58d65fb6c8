#include "rankdel/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace rankdel {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

struct NameTable {
  std::map<std::string, VoterId> ids;
  std::vector<std::string> names;
  int declared = -1;  // fixed count from a `voters:` line, -1 if name-based

  VoterId intern(const std::string& name, int line_no) {
    if (declared >= 0) {
      std::size_t pos = 0;
      int id = -1;
      try {
        id = std::stoi(name, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != name.size() || id < 0 || id >= declared)
        throw ParseError("line " + std::to_string(line_no) + ": voter '" + name +
                         "' is not an id in 0.." + std::to_string(declared - 1));
      return id;
    }
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    VoterId id = static_cast<VoterId>(names.size());
    ids.emplace(name, id);
    names.push_back(name);
    return id;
  }
};

}  // namespace

Instance parse_instance_text(std::istream& in) {
  // First pass: collect tokenized lines and the optional voters count, so
  // name interning does not depend on where the `voters:` line sits.
  std::vector<std::pair<int, std::vector<std::string>>> body;
  int declared = -1;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    std::string& head = toks[0];
    if (head.empty() || head.back() != ':')
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<name>:' at start of line");
    head.pop_back();
    if (head.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty voter name");
    if (head == "voters") {
      if (toks.size() != 2)
        throw ParseError("line " + std::to_string(line_no) +
                         ": voters line needs exactly one count");
      try {
        declared = std::stoi(toks[1]);
      } catch (const std::exception&) {
        declared = -2;
      }
      if (declared < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad voter count");
      continue;
    }
    body.emplace_back(line_no, std::move(toks));
  }

  // Second pass: intern names in order of appearance and build the tables.
  NameTable table;
  table.declared = declared;
  std::vector<VoterId> casting_ids;
  std::vector<std::pair<VoterId, std::vector<VoterId>>> lines;
  std::vector<bool> has_line;
  bool saw_casting = false;
  for (auto& [no, toks] : body) {
    if (toks[0] == "casting") {
      if (saw_casting)
        throw ParseError("line " + std::to_string(no) + ": duplicate casting line");
      saw_casting = true;
      for (std::size_t i = 1; i < toks.size(); ++i)
        casting_ids.push_back(table.intern(toks[i], no));
      continue;
    }
    VoterId v = table.intern(toks[0], no);
    std::vector<VoterId> tg;
    for (std::size_t i = 1; i < toks.size(); ++i)
      tg.push_back(table.intern(toks[i], no));
    if (static_cast<std::size_t>(v) >= has_line.size()) has_line.resize(v + 1, false);
    if (has_line[v])
      throw ParseError("line " + std::to_string(no) + ": duplicate line for voter '" +
                       toks[0] + "'");
    has_line[v] = true;
    lines.emplace_back(v, std::move(tg));
  }
  if (!saw_casting) throw ParseError("missing 'casting:' line");

  int n = declared >= 0 ? declared : static_cast<int>(table.names.size());
  std::vector<bool> casting(n, false);
  for (VoterId c : casting_ids) casting[c] = true;
  std::vector<std::vector<VoterId>> targets(n);
  for (auto& [v, tg] : lines) {
    if (casting[v])
      throw ParseError("casting voter '" +
                       (declared >= 0 ? std::to_string(v) : table.names[v]) +
                       "' must not have a delegation line");
    targets[v] = std::move(tg);
  }

  try {
    return make_instance(n, std::move(targets), std::move(casting),
                         declared >= 0 ? std::vector<std::string>{}
                                       : std::move(table.names));
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance_text(in);
}

Instance parse_instance_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
  // Reuse the text parser by flattening the JSON to v1 lines; the two formats
  // share one schema by construction.
  std::ostringstream flat;
  if (j.contains("voters")) flat << "voters: " << j["voters"].get<int>() << "\n";
  flat << "casting:";
  const auto casting = j.value("casting", nlohmann::json::array());
  for (const auto& c : casting) flat << ' ' << c.get<std::string>();
  flat << "\n";
  const auto delegations = j.value("delegations", nlohmann::json::object());
  for (const auto& [name, tg] : delegations.items()) {
    flat << name << ':';
    for (const auto& t : tg) flat << ' ' << t.get<std::string>();
    flat << "\n";
  }
  return parse_instance_text(flat.str());
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return parse_instance_json(buf.str());
  return parse_instance_text(buf.str());
}

std::string to_text(const Instance& inst) {
  std::ostringstream out;
  if (!inst.has_names()) out << "voters: " << inst.n << "\n";
  out << "casting:";
  for (VoterId v = 0; v < inst.n; ++v)
    if (inst.casting[v]) out << ' ' << inst.name(v);
  out << "\n";
  for (VoterId v = 0; v < inst.n; ++v) {
    if (inst.casting[v]) continue;
    out << inst.name(v) << ':';
    for (VoterId w : inst.targets[v]) out << ' ' << inst.name(w);
    out << "\n";
  }
  return out.str();
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << to_text(inst);
}

EdgeList parse_edge_list(std::istream& in) {
  EdgeList el;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected 'u v [weight]'");
    EdgeList::Edge e;
    try {
      e.u = std::stoi(toks[0]);
      e.v = std::stoi(toks[1]);
      if (toks.size() == 3) e.weight = std::stod(toks[2]);
    } catch (const std::exception&) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": bad number");
    }
    if (e.u < 0 || e.v < 0)
      throw ParseError("edge list line " + std::to_string(line_no) + ": negative id");
    el.n = std::max({el.n, e.u + 1, e.v + 1});
    el.edges.push_back(e);
  }
  return el;
}

EdgeList load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list: " + path);
  return parse_edge_list(in);
}

}  // namespace rankdel
