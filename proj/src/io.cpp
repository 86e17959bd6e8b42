#include "flatsum/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace flatsum {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename F>
void for_each_data_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    f(line, line_no);
  }
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DomainError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                      "' is not a base-10 integer");
  }
  return v;
}

}  // namespace

FrequencySet parse_frequency_set(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed JSON frequency set: ") + e.what());
    }
    if (!j.contains("freqs") || !j["freqs"].is_array()) {
      throw DomainError("JSON frequency set needs a \"freqs\" array");
    }
    std::vector<std::int64_t> f;
    for (const auto& v : j["freqs"]) {
      if (!v.is_number_integer()) throw DomainError("\"freqs\" entries must be integers");
      f.push_back(v.get<std::int64_t>());
    }
    return FrequencySet(std::move(f));
  }
  std::vector<std::int64_t> f;
  for_each_data_line(text, [&](std::string_view line, std::size_t no) {
    f.push_back(parse_int(line, no));
  });
  return FrequencySet(std::move(f));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
  if (!out) throw DomainError("write failed for " + path.string());
}

FrequencySet read_frequency_file(const std::filesystem::path& path) {
  return parse_frequency_set(read_text_file(path));
}

std::string format_frequency_set(const FrequencySet& set, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  for (std::int64_t v : set.freqs()) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

SignVector parse_sign_column(std::string_view text) {
  std::vector<int> eps;
  for_each_data_line(text, [&](std::string_view line, std::size_t no) {
    const std::int64_t v = parse_int(line, no);
    if (v != 1 && v != -1) {
      throw DomainError("line " + std::to_string(no) + ": sign must be +1 or -1");
    }
    eps.push_back(static_cast<int>(v));
  });
  return SignVector(std::move(eps));
}

SignVector read_sign_file(const std::filesystem::path& path) {
  return parse_sign_column(read_text_file(path));
}

std::string format_sign_column(const SignVector& eps) {
  std::string out;
  for (int e : eps.values()) out += e > 0 ? "+1\n" : "-1\n";
  return out;
}

void to_json(nlohmann::json& j, const ExtremumCertificate& c) {
  j = nlohmann::json{{"x_star", c.x_star},
                     {"value", c.value},
                     {"certified_bound", c.certified_bound},
                     {"tol", c.tol},
                     {"lipschitz", c.lipschitz}};
}

void from_json(const nlohmann::json& j, ExtremumCertificate& c) {
  j.at("x_star").get_to(c.x_star);
  j.at("value").get_to(c.value);
  j.at("certified_bound").get_to(c.certified_bound);
  j.at("tol").get_to(c.tol);
  j.at("lipschitz").get_to(c.lipschitz);
}

void to_json(nlohmann::json& j, const PerturbedEntry& e) {
  j = nlohmann::json{{"value", e.value}, {"multiplicity", e.multiplicity}};
}

void to_json(nlohmann::json& j, const PerturbationReport& r) {
  j = nlohmann::json{
      {"case", to_string(r.perturbation_case)},
      {"n", r.eps.size()},
      {"x0", r.x0},
      {"eps", r.eps.values()},
      {"rectified_sum", r.rectified_sum},
      {"term_I", r.term_i},
      {"term_II", r.term_ii},
      {"perturbed_value_at_x0", r.perturbed_value_at_x0},
      {"original_extremum", r.original_extremum},
      {"perturbed_extremum", r.perturbed_extremum},
      {"c_empirical", r.c_empirical},
      {"collisions", r.collisions},
      {"signs_forced", r.signs_forced},
      {"warnings", r.warnings},
  };
}

void to_json(nlohmann::json& j, const DensityReport& r) {
  j = nlohmann::json{{"m", r.m}, {"l1_norm", r.l1_norm}};
  j["count_exact"] = r.count_exact ? nlohmann::json(*r.count_exact) : nlohmann::json();
  j["count_numeric"] = r.count_numeric ? nlohmann::json(*r.count_numeric) : nlohmann::json();
  j["count_bound"] = r.count_bound ? nlohmann::json(*r.count_bound) : nlohmann::json();
  j["m1_used"] = r.m1_used ? nlohmann::json(*r.m1_used) : nlohmann::json();
}

void to_json(nlohmann::json& j, const CutoffResult& r) {
  j = nlohmann::json{{"min_cutoff", r.cutoff}, {"exceeded", r.exceeded}, {"bound", r.bound}};
}

}  // namespace flatsum
