#include "younglab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace younglab {

namespace {

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_rows(std::ostream& os, int z, const PhiGrid& grid, const std::vector<double>& row) {
  for (int k = 0; k < grid.size(); ++k)
    os << z << ',' << fmt17(grid.node(k)) << ',' << fmt17(row[k]) << '\n';
}

struct Row {
  int z;
  double phi;
  double value;
};

} // namespace

void write_joint_csv(const JointDistribution& joint, std::ostream& os, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) os << "# " << line << '\n';
  }
  os << "z,phi,value\n";
  write_rows(os, 1, joint.grid, joint.row_plus);
  write_rows(os, -1, joint.grid, joint.row_minus);
}

void write_joint_csv(const JointDistribution& joint, const std::string& path,
                     const std::string& comment) {
  std::ofstream os(path);
  if (!os) throw IoError("write_joint_csv: cannot open '" + path + "' for writing");
  write_joint_csv(joint, os, comment);
  os.flush();
  if (!os) throw IoError("write_joint_csv: failed writing '" + path + "'");
}

JointDistribution read_joint_csv(std::istream& is, OutcomeLabel label) {
  std::vector<Row> rows;
  std::string line;
  bool saw_header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != "z,phi,value")
        throw IoError("read_joint_csv: expected header 'z,phi,value', got '" + line + "'");
      saw_header = true;
      continue;
    }
    Row r;
    char trailing;
    const int got = std::sscanf(line.c_str(), "%d,%lf,%lf%c", &r.z, &r.phi, &r.value, &trailing);
    if (got != 3 || (r.z != 1 && r.z != -1)) {
      std::ostringstream os;
      os << "read_joint_csv: malformed row at line " << lineno << ": '" << line << "'";
      throw IoError(os.str());
    }
    rows.push_back(r);
  }
  if (!saw_header) throw IoError("read_joint_csv: missing 'z,phi,value' header");
  if (rows.size() < 6 || rows.size() % 2 != 0)
    throw IoError("read_joint_csv: need two equal blocks of at least 3 nodes each");

  const int n = static_cast<int>(rows.size()) / 2;
  PhiGrid grid(n);
  std::vector<double> plus(n), minus(n);
  for (int k = 0; k < n; ++k) {
    const Row& a = rows[k];
    const Row& b = rows[n + k];
    if (a.z != 1 || b.z != -1)
      throw IoError("read_joint_csv: rows must form a z=+1 block followed by a z=-1 block");
    const double node = grid.node(k);
    if (std::abs(a.phi - node) > 1e-9 || std::abs(b.phi - node) > 1e-9) {
      std::ostringstream os;
      os << "read_joint_csv: phi column must be the midpoint grid; row " << k << " has phi "
         << a.phi << ", expected " << node;
      throw IoError(os.str());
    }
    plus[k] = a.value;
    minus[k] = b.value;
  }
  return JointDistribution(grid, std::move(plus), std::move(minus), label);
}

JointDistribution read_joint_csv(const std::string& path, OutcomeLabel label) {
  std::ifstream is(path);
  if (!is) throw IoError("read_joint_csv: cannot open '" + path + "'");
  return read_joint_csv(is, label);
}

} // namespace younglab
