#include "fcvqc/network/checkpoint.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fcvqc/util/text.hpp"

namespace fcvqc::network {

namespace {

constexpr const char* kMagic = "fcvqc-checkpoint v1";

[[noreturn]] void corrupt(const std::string& path, const std::string& why) {
  throw std::runtime_error("checkpoint '" + path + "': " + why);
}

std::string expect_field(std::istream& in, const std::string& key,
                         const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) corrupt(path, "unexpected end of file, wanted '" + key + "'");
  const auto sp = line.find(' ');
  if (sp == std::string::npos || line.substr(0, sp) != key)
    corrupt(path, "expected field '" + key + "', got '" + line + "'");
  return trim(line.substr(sp + 1));
}

}  // namespace

void save_checkpoint(const std::string& path, const NetworkSpec& spec,
                     const std::vector<double>& params) {
  if (params.size() != spec.param_count)
    throw std::invalid_argument("save_checkpoint: parameter count mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << kMagic << "\n";
  out << "kind " << (spec.monolith ? "monolith" : "staged") << "\n";
  if (spec.monolith)
    out << "monolith_dims " << spec.input_dim << " " << spec.output_dim << "\n";
  else
    out << "topology " << spec.topology_text() << "\n";
  out << "input_dim " << spec.input_dim << "\n";
  out << "block_width " << spec.block_width << "\n";
  out << "mixing " << to_string(spec.mixing) << "\n";
  out << "hidden_layers " << spec.hidden_layers << "\n";
  out << "depth " << spec.depth << "\n";
  out << "feature_basis ";
  if (spec.feature_basis.empty()) {
    out << "none";
  } else {
    for (std::size_t i = 0; i < spec.feature_basis.size(); ++i)
      out << (i ? "," : "") << to_string(spec.feature_basis[i]);
  }
  out << "\n";
  out << "param_count " << params.size() << "\n";
  out << "params\n";
  for (double p : params) out << format_double(p) << "\n";
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || trim(line) != kMagic)
    corrupt(path, "bad magic line");

  const std::string kind = expect_field(in, "kind", path);
  std::string topology, monolith_dims;
  if (kind == "monolith")
    monolith_dims = expect_field(in, "monolith_dims", path);
  else if (kind == "staged")
    topology = expect_field(in, "topology", path);
  else
    corrupt(path, "unknown kind '" + kind + "'");

  const int input_dim =
      static_cast<int>(parse_long(expect_field(in, "input_dim", path), "input_dim"));
  const int block_width =
      static_cast<int>(parse_long(expect_field(in, "block_width", path), "block_width"));
  const MixingRule mixing = mixing_from_string(expect_field(in, "mixing", path));
  const int hidden =
      static_cast<int>(parse_long(expect_field(in, "hidden_layers", path), "hidden_layers"));
  const int depth = static_cast<int>(parse_long(expect_field(in, "depth", path), "depth"));
  const std::string basis_text = expect_field(in, "feature_basis", path);
  std::vector<FeatureMap> basis;
  if (basis_text != "none")
    for (const std::string& name : split(basis_text, ','))
      basis.push_back(feature_map_from_string(trim(name)));
  const std::size_t count = static_cast<std::size_t>(
      parse_long(expect_field(in, "param_count", path), "param_count"));

  if (!std::getline(in, line) || trim(line) != "params")
    corrupt(path, "missing 'params' section");

  Checkpoint ck;
  if (kind == "monolith") {
    std::istringstream dims(monolith_dims);
    int din = 0, dout = 0;
    if (!(dims >> din >> dout)) corrupt(path, "bad monolith_dims");
    ck.spec = make_monolith(din, dout, hidden, depth);
  } else {
    ck.spec = make_network(topology, block_width, mixing, hidden, depth, basis, input_dim);
  }
  if (ck.spec.param_count != count)
    corrupt(path, "param_count " + std::to_string(count) + " does not match the architecture (" +
                      std::to_string(ck.spec.param_count) + ")");

  ck.params.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) corrupt(path, "truncated parameter list");
    ck.params.push_back(parse_double(line, "checkpoint parameter"));
  }
  return ck;
}

}  // namespace fcvqc::network
