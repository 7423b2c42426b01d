#include "invnet/mps.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace invnet {
namespace {

std::string row_tag(size_t i) { return "R" + std::to_string(i); }
std::string col_tag(size_t j) { return "C" + std::to_string(j); }

struct RowKind {
  char type;     // L, G, E, N
  double rhs;
  double range;  // 0 if none
};

RowKind classify(const Model::Row& r) {
  if (r.lo == r.hi) return {'E', r.lo, 0.0};
  if (r.lo > -kInf && r.hi < kInf) return {'L', r.hi, r.hi - r.lo};
  if (r.hi < kInf) return {'L', r.hi, 0.0};
  return {'G', r.lo, 0.0};
}

void field(std::ostream& os, const std::string& a, const std::string& b, double v) {
  os << "    " << std::left << std::setw(10) << a << std::setw(10) << b << std::setprecision(17)
     << v << "\n";
}

}  // namespace

void write_mps(const Model& model, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_mps: cannot open " + path.string());
  os << "NAME          MODEL\n";
  if (model.maximize()) os << "OBJSENSE\n    MAX\n";
  os << "ROWS\n";
  os << " N  COST\n";
  std::vector<RowKind> kinds;
  for (size_t i = 0; i < model.rows().size(); ++i) {
    kinds.push_back(classify(model.rows()[i]));
    os << " " << kinds.back().type << "  " << row_tag(i) << "\n";
  }

  // Column-major entries.
  std::vector<std::vector<std::pair<std::string, double>>> cols(model.num_vars());
  for (const LinExpr::Term& t : model.objective().terms())
    cols[t.var].push_back({"COST", t.coeff});
  for (size_t i = 0; i < model.rows().size(); ++i)
    for (const LinExpr::Term& t : model.rows()[i].expr.terms())
      cols[t.var].push_back({row_tag(i), t.coeff});

  os << "COLUMNS\n";
  bool in_int = false;
  for (int j = 0; j < model.num_vars(); ++j) {
    const bool want_int = model.vars()[j].type == VarType::Binary;
    if (want_int && !in_int) {
      os << "    MARKER                 'MARKER'                 'INTORG'\n";
      in_int = true;
    } else if (!want_int && in_int) {
      os << "    MARKER                 'MARKER'                 'INTEND'\n";
      in_int = false;
    }
    if (cols[j].empty()) field(os, col_tag(j), "COST", 0.0);
    for (const auto& [row, v] : cols[j]) field(os, col_tag(j), row, v);
  }
  if (in_int) os << "    MARKER                 'MARKER'                 'INTEND'\n";

  os << "RHS\n";
  if (model.objective().constant() != 0.0)
    field(os, "RHS", "COST", -model.objective().constant());
  for (size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i].rhs != 0.0) field(os, "RHS", row_tag(i), kinds[i].rhs);
  bool any_range = false;
  for (const RowKind& k : kinds) any_range |= k.range != 0.0;
  if (any_range) {
    os << "RANGES\n";
    for (size_t i = 0; i < kinds.size(); ++i)
      if (kinds[i].range != 0.0) field(os, "RNG", row_tag(i), kinds[i].range);
  }
  os << "BOUNDS\n";
  for (int j = 0; j < model.num_vars(); ++j) {
    const auto& v = model.vars()[j];
    if (v.type == VarType::Binary && v.lo == 0.0 && v.hi == 1.0) {
      os << " BV " << std::left << std::setw(10) << "BND" << col_tag(j) << "\n";
      continue;
    }
    if (v.lo == -kInf && v.hi == kInf) {
      os << " FR " << std::left << std::setw(10) << "BND" << col_tag(j) << "\n";
      continue;
    }
    if (v.lo == -kInf)
      os << " MI " << std::left << std::setw(10) << "BND" << col_tag(j) << "\n";
    else if (v.lo != 0.0) {
      os << " LO " << std::left << std::setw(10) << "BND" << std::setw(10) << col_tag(j)
         << std::setprecision(17) << v.lo << "\n";
    }
    if (v.hi < kInf)
      os << " UP " << std::left << std::setw(10) << "BND" << std::setw(10) << col_tag(j)
         << std::setprecision(17) << v.hi << "\n";
  }
  os << "ENDATA\n";
}

Model read_mps(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_mps: cannot open " + path.string());

  enum Section { None, Rows, Columns, Rhs, Ranges, Bounds, ObjSense } section = None;
  struct RowInfo {
    char type;
    double rhs = 0.0;
    double range = 0.0;
    bool has_range = false;
    LinExpr expr;
  };
  std::vector<std::string> row_order;
  std::map<std::string, RowInfo> rows;
  std::string obj_row;
  double obj_constant = 0.0;
  bool maximize = false;

  struct ColInfo {
    bool integer = false;
    double lo = 0.0, hi = kInf;
    bool lo_set = false, hi_set = false, bv = false, fr = false, mi = false;
    std::vector<std::pair<std::string, double>> entries;
  };
  std::vector<std::string> col_order;
  std::map<std::string, ColInfo> cols;
  bool in_int = false;

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '*') continue;
    if (!isspace(static_cast<unsigned char>(line[0]))) {
      std::istringstream ss(line);
      std::string word;
      ss >> word;
      if (word == "NAME") section = None;
      else if (word == "OBJSENSE") section = ObjSense;
      else if (word == "ROWS") section = Rows;
      else if (word == "COLUMNS") section = Columns;
      else if (word == "RHS") section = Rhs;
      else if (word == "RANGES") section = Ranges;
      else if (word == "BOUNDS") section = Bounds;
      else if (word == "ENDATA") break;
      else throw std::runtime_error("read_mps: unknown section " + word);
      continue;
    }
    std::istringstream ss(line);
    switch (section) {
      case ObjSense: {
        std::string w;
        ss >> w;
        maximize = (w == "MAX" || w == "MAXIMIZE");
        break;
      }
      case Rows: {
        std::string type, name;
        ss >> type >> name;
        if (type == "N") {
          if (obj_row.empty()) obj_row = name;
        } else {
          rows[name].type = type[0];
          row_order.push_back(name);
        }
        break;
      }
      case Columns: {
        std::string col, a;
        ss >> col >> a;
        if (a == "'MARKER'") {
          std::string marker;
          ss >> marker;
          in_int = (marker == "'INTORG'");
          break;
        }
        if (!cols.count(col)) {
          col_order.push_back(col);
          cols[col].integer = in_int;
        }
        double v;
        std::string row = a;
        while (true) {
          if (!(ss >> v)) throw std::runtime_error("read_mps: bad COLUMNS line: " + line);
          if (v != 0.0) cols[col].entries.push_back({row, v});
          if (!(ss >> row)) break;
        }
        break;
      }
      case Rhs: {
        std::string setname, row;
        double v;
        ss >> setname >> row;
        while (ss >> v) {
          if (row == obj_row)
            obj_constant = -v;
          else
            rows.at(row).rhs = v;
          if (!(ss >> row)) break;
        }
        break;
      }
      case Ranges: {
        std::string setname, row;
        double v;
        ss >> setname >> row;
        while (ss >> v) {
          rows.at(row).range = v;
          rows.at(row).has_range = true;
          if (!(ss >> row)) break;
        }
        break;
      }
      case Bounds: {
        std::string type, setname, col;
        ss >> type >> setname >> col;
        ColInfo& ci = cols[col];
        double v = 0.0;
        if (type == "LO" || type == "UP" || type == "FX" || type == "BV") {
          if (type != "BV" && !(ss >> v))
            throw std::runtime_error("read_mps: bad BOUNDS line: " + line);
        }
        if (type == "LO") { ci.lo = v; ci.lo_set = true; }
        else if (type == "UP") { ci.hi = v; ci.hi_set = true; }
        else if (type == "FX") { ci.lo = ci.hi = v; ci.lo_set = ci.hi_set = true; }
        else if (type == "FR") ci.fr = true;
        else if (type == "MI") ci.mi = true;
        else if (type == "BV") ci.bv = true;
        else throw std::runtime_error("read_mps: unsupported bound type " + type);
        break;
      }
      case None: break;
    }
  }

  Model model;
  std::map<std::string, int> col_index;
  for (const std::string& name : col_order) {
    const ColInfo& ci = cols[name];
    double lo = ci.lo, hi = ci.hi;
    if (ci.fr) { lo = -kInf; hi = kInf; }
    if (ci.mi) lo = -kInf;
    VarType vt = VarType::Continuous;
    if (ci.bv) { lo = 0.0; hi = 1.0; vt = VarType::Binary; }
    else if (ci.integer) vt = VarType::Binary;
    col_index[name] = model.add_var(name, lo, hi, vt);
  }
  LinExpr obj(obj_constant);
  for (const std::string& cname : col_order)
    for (const auto& [row, v] : cols[cname].entries) {
      if (row == obj_row)
        obj.add_term(col_index[cname], v);
      else
        rows.at(row).expr.add_term(col_index[cname], v);
    }
  model.set_objective(obj, maximize);
  for (const std::string& rname : row_order) {
    RowInfo& ri = rows[rname];
    double lo = -kInf, hi = kInf;
    if (ri.type == 'E') lo = hi = ri.rhs;
    else if (ri.type == 'L') hi = ri.rhs;
    else if (ri.type == 'G') lo = ri.rhs;
    if (ri.has_range) {
      const double r = std::abs(ri.range);
      if (ri.type == 'L') lo = hi - r;
      else if (ri.type == 'G') hi = lo + r;
      else if (ri.type == 'E') { lo = ri.rhs; hi = ri.rhs + r; }
    }
    model.add_range(ri.expr, lo, hi, rname);
  }
  return model;
}

}  // namespace invnet
