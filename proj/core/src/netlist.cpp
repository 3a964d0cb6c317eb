#include "ridealog/netlist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "ridealog/errors.hpp"

namespace ridealog {

namespace {

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string full(Complex z) { return full(z.real()) + "," + full(z.imag()); }

double parse_real(const std::string& tok, int line_no) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || !std::isfinite(x))
    throw AssemblyError("netlist line " + std::to_string(line_no) + ": bad number '" + tok + "'");
  return x;
}

Complex parse_complex(const std::string& tok, int line_no) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos)
    return Complex(parse_real(tok, line_no), 0.0);
  return Complex(parse_real(tok.substr(0, comma), line_no),
                 parse_real(tok.substr(comma + 1), line_no));
}

}  // namespace

char branch_kind_letter(BranchKind kind) {
  switch (kind) {
    case BranchKind::Conductance: return 'G';
    case BranchKind::Inductor: return 'L';
    case BranchKind::Capacitor: return 'C';
    case BranchKind::CurrentSource: return 'I';
    case BranchKind::VoltageSource: return 'V';
  }
  throw AssemblyError("unknown branch kind");
}

BranchKind branch_kind_from_letter(char letter) {
  switch (letter) {
    case 'G': return BranchKind::Conductance;
    case 'L': return BranchKind::Inductor;
    case 'C': return BranchKind::Capacitor;
    case 'I': return BranchKind::CurrentSource;
    case 'V': return BranchKind::VoltageSource;
  }
  throw AssemblyError(std::string("unknown branch kind '") + letter + "'");
}

int Netlist::add_node(const std::string& label) {
  const auto it = std::find(node_labels.begin(), node_labels.end(), label);
  if (it != node_labels.end()) return static_cast<int>(it - node_labels.begin());
  node_labels.push_back(label);
  return node_count() - 1;
}

int Netlist::node_of(const std::string& label) const {
  const auto it = std::find(node_labels.begin(), node_labels.end(), label);
  if (it == node_labels.end()) throw AssemblyError("unknown node '" + label + "'");
  return static_cast<int>(it - node_labels.begin());
}

void write_netlist(const Netlist& net, std::ostream& out) {
  out << "# force-current analogue netlist\n";
  out << "# frequency independent: sources are rms phasors, omega is supplied at solve time\n";
  if (!net.coordinate_nodes.empty()) {
    out << "#% coords";
    for (int node : net.coordinate_nodes) out << ' ' << net.node_labels[node];
    out << '\n';
  }
  const auto& label = net.node_labels;
  for (const CoupledCapacitorPair& pair : net.couplings) {
    const double c_m = pair.dot_aligned ? pair.c_m : -pair.c_m;
    out << "KCAP CC_" << label[pair.node_a] << label[pair.node_b] << ' '
        << label[pair.node_a] << ' ' << label[pair.node_b] << ' '
        << full(pair.c_a) << ' ' << full(pair.c_b) << ' ' << full(c_m);
    if (!pair.provenance.empty()) out << " # " << pair.provenance;
    out << '\n';
  }
  for (const Branch& b : net.branches) {
    out << branch_kind_letter(b.kind) << ' ' << b.name << ' '
        << label[b.node_from] << ' ' << label[b.node_to] << ' ';
    if (b.kind == BranchKind::CurrentSource || b.kind == BranchKind::VoltageSource)
      out << full(b.phasor);
    else
      out << full(b.value);
    if (!b.provenance.empty()) out << " # " << b.provenance;
    out << '\n';
  }
}

Netlist read_netlist(std::istream& in) {
  Netlist net;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string provenance;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      if (line.compare(hash, 2, "#%") == 0) {
        std::istringstream directive(line.substr(hash + 2));
        std::string word;
        directive >> word;
        if (word == "coords") {
          while (directive >> word) net.coordinate_nodes.push_back(net.add_node(word));
        }
        continue;
      }
      provenance = line.substr(hash + 1);
      if (!provenance.empty() && provenance.front() == ' ') provenance.erase(0, 1);
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string kind_tok, name, from, to;
    if (!(fields >> kind_tok)) continue;  // blank line
    if (!(fields >> name >> from >> to))
      throw AssemblyError("netlist line " + std::to_string(line_no) + ": too few fields");

    if (kind_tok == "KCAP") {
      std::string ca, cb, cm;
      if (!(fields >> ca >> cb >> cm))
        throw AssemblyError("netlist line " + std::to_string(line_no) +
                            ": KCAP needs nodeA nodeB C_A C_B C_M");
      CoupledCapacitorPair pair;
      pair.node_a = net.add_node(from);
      pair.node_b = net.add_node(to);
      pair.c_a = parse_real(ca, line_no);
      pair.c_b = parse_real(cb, line_no);
      pair.c_m = parse_real(cm, line_no);
      pair.provenance = provenance;
      net.couplings.push_back(pair);
      continue;
    }
    Branch b;
    try {
      if (kind_tok.size() != 1) throw AssemblyError("not a single letter");
      b.kind = branch_kind_from_letter(kind_tok[0]);
    } catch (const AssemblyError&) {
      throw AssemblyError("netlist line " + std::to_string(line_no) + ": unknown kind '" +
                          kind_tok + "'");
    }
    b.name = name;
    b.node_from = net.add_node(from);
    b.node_to = net.add_node(to);
    if (b.node_from == b.node_to)
      throw AssemblyError("netlist line " + std::to_string(line_no) +
                          ": branch endpoints coincide");
    std::string value;
    if (!(fields >> value))
      throw AssemblyError("netlist line " + std::to_string(line_no) + ": missing value");
    if (b.kind == BranchKind::CurrentSource || b.kind == BranchKind::VoltageSource)
      b.phasor = parse_complex(value, line_no);
    else
      b.value = parse_real(value, line_no);
    b.provenance = provenance;
    net.branches.push_back(std::move(b));
  }
  return net;
}

}  // namespace ridealog
