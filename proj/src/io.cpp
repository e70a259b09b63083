#include "supernomial/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace supernomial::io {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string(what) + " must contain integers only");
    out.push_back(v.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Partition> partition_list(const Json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array of partitions");
  std::vector<Partition> out;
  for (const auto& p : j)
    out.push_back(partition_from_json(p));
  return out;
}

} // namespace

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p())
      out.push_back(c.get_si());
    else
      out.push_back(c.get_str());
  }
  return out;
}

QPolynomial qpoly_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("polynomial must be a dense coefficient array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer())
      coeffs.emplace_back(static_cast<long>(c.get<long long>()));
    else if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      throw std::invalid_argument("polynomial coefficients must be integers");
  }
  return QPolynomial(std::move(coeffs));
}

Json to_json(const MultiPartition& p) {
  Json out = Json::array();
  for (const auto& c : p.parts())
    out.push_back(to_json(c));
  return out;
}

MultiPartition multipartition_from_json(const Json& j) {
  return MultiPartition(partition_list(j, "multipartition"));
}

Json to_json(const MultiTableau& t) {
  return {{"shape", to_json(t.shape())}, {"fillings", t.fillings()}, {"n", t.alphabet()}};
}

MultiTableau multitableau_from_json(const Json& j) {
  const Json& raw = field(j, "fillings");
  if (!raw.is_array())
    throw std::invalid_argument("fillings must be an array");
  std::vector<Filling> fillings;
  for (const auto& comp : raw) {
    if (!comp.is_array())
      throw std::invalid_argument("each filling must be an array of rows");
    Filling f;
    for (const auto& row : comp)
      f.push_back(int_array(row, "filling row"));
    fillings.push_back(std::move(f));
  }
  int n = j.contains("n") ? j.at("n").get<int>() : 0;
  MultiTableau t = MultiTableau::from_fillings(fillings, n);
  if (j.contains("shape") && multipartition_from_json(j.at("shape")) != t.shape())
    throw std::invalid_argument("shape does not match the fillings");
  return t;
}

Json to_json(const RibbonTableau& t) {
  Json chain = Json::array();
  for (const auto& p : t.chain())
    chain.push_back(to_json(p));
  Json out{{"L", t.ribbon_length()}, {"shape", to_json(t.chain().back())}, {"chain", chain}};
  if (!t.chain().front().empty())
    out["inner"] = to_json(t.chain().front());
  return out;
}

RibbonTableau ribbon_tableau_from_json(const Json& j) {
  int L = field(j, "L").get<int>();
  auto chain = partition_list(field(j, "chain"), "chain");
  if (chain.empty())
    throw std::invalid_argument("chain must not be empty");
  if (j.contains("shape") && partition_from_json(j.at("shape")) != chain.back())
    throw std::invalid_argument("shape does not match the end of the chain");
  if (j.contains("inner") && partition_from_json(j.at("inner")) != chain.front())
    throw std::invalid_argument("inner shape does not match the start of the chain");
  return RibbonTableau(L, std::move(chain));
}

Json to_json(const RiggedConfiguration& rc) {
  const auto& c = rc.config();
  Json nu = Json::array();
  for (const auto& p : c.interior())
    nu.push_back(to_json(p));
  return {{"mode", to_string(c.mode())}, {"lambda", c.lambda()}, {"mu", to_json(c.mu())},
          {"n", c.alphabet()},          {"nu", nu},            {"riggings", rc.labels()}};
}

RiggedConfiguration rigged_from_json(const Json& j) {
  Mode mode = parse_mode(field(j, "mode").get<std::string>());
  auto nu = partition_list(field(j, "nu"), "nu");
  int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(nu.size()) + 1;
  Composition lambda = int_array(field(j, "lambda"), "lambda");
  Partition mu = partition_from_json(field(j, "mu"));
  RiggedConfiguration::Labels labels;
  const Json& raw = field(j, "riggings");
  if (!raw.is_array())
    throw std::invalid_argument("riggings must be an array");
  for (const auto& per_partition : raw) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : per_partition)
      rows.push_back(int_array(row, "rigging row"));
    labels.push_back(std::move(rows));
  }
  return RiggedConfiguration(Configuration(mode, lambda, mu, n, std::move(nu)),
                             std::move(labels));
}

Json to_json(const RiggedState& s) {
  Json nu = Json::array();
  Json labels = Json::array();
  Json vacancies = Json::array();
  for (int a = 1; a <= s.alphabet(); ++a) {
    nu.push_back(to_json(s.nu(a)));
    if (a == s.alphabet())
      continue;
    Json rows = Json::array();
    Json vac = Json::array();
    for (int i = 1; i <= s.height(); ++i) {
      rows.push_back(s.labels(a, i));
      vac.push_back(s.vacancy(a, i));
    }
    labels.push_back(rows);
    vacancies.push_back(vac);
  }
  return {{"nu", nu}, {"labels", labels}, {"vacancies", vacancies}};
}

Json to_json(const BijectionTrace& trace) {
  Json stages = Json::array();
  for (const auto& st : trace.stages)
    stages.push_back({{"component", st.component},
                      {"index", st.index},
                      {"letter", st.letter},
                      {"state", to_json(st.state)}});
  return {{"mode", to_string(trace.mode)},
          {"direction", trace.direction == Direction::forward ? "forward" : "backward"},
          {"stages", stages}};
}

Json to_json(const DeltaReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps)
    steps.push_back({{"component", s.component},
                     {"index", s.index},
                     {"letter", s.letter},
                     {"inversion_change", s.inversion_change},
                     {"closed_form", s.closed_form},
                     {"statistic_change", s.statistic_change}});
  return {{"ok", report.ok}, {"detail", report.detail}, {"steps", steps}};
}

namespace {

std::string resolve(const std::string& text) {
  if (text.empty() || text.front() != '@')
    return text;
  std::ifstream in(text.substr(1));
  if (!in)
    throw std::invalid_argument("cannot read file '" + text.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

Json parse_argument(const std::string& text) {
  try {
    return Json::parse(resolve(text));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<int> parse_int_argument(const std::string& text) {
  std::string body = resolve(text);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.pop_back();
  return parse_int_list(body);
}

} // namespace supernomial::io
