#include "expasym/verify/report.hpp"

#include <iomanip>
#include "json.hpp"
#include <sstream>

namespace expasym {

namespace {

std::string number_text(const Number& v, int digits) { return v.to_string(digits); }

std::string ratio_text(double ratio) {
  std::ostringstream os;
  os << std::setprecision(6) << ratio;
  return os.str();
}

// ratio_track skips entries whose predecessor residual vanished; map them
// back onto grid rows.
std::vector<std::string> ratio_column(const ConvergenceReport& rep) {
  std::vector<std::string> column(rep.grid.size());
  std::size_t next = 0;
  for (std::size_t i = 1; i < rep.grid.size() && next < rep.ratio_track.size(); ++i) {
    if (rep.residuals[i - 1].is_zero()) continue;
    column[i] = ratio_text(rep.ratio_track[next++]);
  }
  return column;
}

}  // namespace

std::string report_to_json(const ConvergenceReport& rep, int digits) {
  nlohmann::ordered_json j;
  j["kind"] = rep.kind;
  j["family"] = rep.family_id;
  j["f"] = rep.f_description;
  j["f_spec"] = rep.f_spec;
  j["x"] = to_string(rep.x);
  j["r"] = rep.r;
  j["q"] = rep.q;
  j["grid"] = rep.grid;
  auto strings = [&](const std::vector<Number>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : v) arr.push_back(number_text(e, digits));
    return arr;
  };
  j["values"] = strings(rep.values);
  j["predictions"] = strings(rep.predictions);
  j["residuals"] = strings(rep.residuals);
  j["zero_residuals"] = rep.zero_residuals;
  j["all_zero"] = rep.all_zero;
  j["fitted_order"] = rep.fitted_order ? nlohmann::ordered_json(*rep.fitted_order) : nlohmann::ordered_json(nullptr);
  j["r_squared"] = rep.r_squared ? nlohmann::ordered_json(*rep.r_squared) : nlohmann::ordered_json(nullptr);
  j["ratios"] = rep.ratio_track;
  j["pass"] = rep.pass;
  if (!rep.note.empty()) j["note"] = rep.note;
  j["config"] = {{"precision_bits", rep.precision_bits}, {"tol", rep.tol}};
  return j.dump(2) + "\n";
}

std::string report_to_csv(const ConvergenceReport& rep, int digits) {
  std::ostringstream os;
  os << "n,value,prediction,residual,ratio\n";
  const auto ratios = ratio_column(rep);
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    os << rep.grid[i] << ',' << number_text(rep.values[i], digits) << ',' << number_text(rep.predictions[i], digits)
       << ',' << number_text(rep.residuals[i], digits) << ',' << ratios[i] << '\n';
  return os.str();
}

std::string report_to_text(const ConvergenceReport& rep, int digits) {
  std::ostringstream os;
  os << rep.kind << " study: family " << rep.family_id << ", f(t) = " << rep.f_description << ", x = "
     << to_string(rep.x) << ", r = " << rep.r;
  if (rep.kind == "residual") os << ", q = " << rep.q;
  os << "\nprecision " << rep.precision_bits << " bits, tol " << rep.tol << "\n";
  const auto ratios = ratio_column(rep);
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    os << "  n = " << std::setw(6) << rep.grid[i] << "  residual " << number_text(rep.residuals[i], digits);
    if (!ratios[i].empty()) os << "  ratio " << ratios[i];
    os << '\n';
  }
  if (rep.fitted_order) os << "fitted order " << *rep.fitted_order << " (r^2 " << rep.r_squared.value_or(0) << ")\n";
  if (!rep.note.empty()) os << "note: " << rep.note << '\n';
  os << (rep.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace expasym
