#pragma once

// File formats shared by the library and the CLI.
//
// Frequency sets: UTF-8 text, one base-10 positive integer per line,
// strictly increasing, '#' comment lines and blank lines ignored; or JSON
// {"freqs": [...]}. Sign vectors: one "+1"/"-1" per line, aligned with the
// frequency file.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "flatsum/density.hpp"
#include "flatsum/perturb.hpp"
#include "flatsum/trigsum.hpp"

namespace flatsum {

FrequencySet parse_frequency_set(std::string_view text);
FrequencySet read_frequency_file(const std::filesystem::path& path);
std::string format_frequency_set(const FrequencySet& set, std::string_view comment = {});

SignVector parse_sign_column(std::string_view text);
SignVector read_sign_file(const std::filesystem::path& path);
std::string format_sign_column(const SignVector& eps);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

void to_json(nlohmann::json& j, const ExtremumCertificate& c);
void from_json(const nlohmann::json& j, ExtremumCertificate& c);
void to_json(nlohmann::json& j, const PerturbedEntry& e);
void to_json(nlohmann::json& j, const PerturbationReport& r);
void to_json(nlohmann::json& j, const DensityReport& r);
void to_json(nlohmann::json& j, const CutoffResult& r);

}  // namespace flatsum
