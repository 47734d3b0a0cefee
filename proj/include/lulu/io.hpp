#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lulu/signal.hpp"
#include "lulu/variation.hpp"

namespace lulu {

/// Malformed CSV or JSON text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file that cannot be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

/// From the file extension (".csv" or ".json", case-insensitive).
std::optional<Format> infer_format(const std::filesystem::path& p);
std::optional<Format> parse_format(std::string_view name);

/// {"domain":[lo,hi],"breakpoints":[{"x","value","left_limit","right_limit"}]}
/// Omitted limits default to the point value.
PiecewiseLinear parse_function_json(std::string_view text);
std::string function_to_json(const PiecewiseLinear& f);

/// One value per row, optional header, optional second column holding x.
/// A present x column must be uniformly spaced; it sets spacing and origin.
DiscreteSignal parse_signal_csv(std::string_view text);
std::string signal_to_csv(const DiscreteSignal& s);

std::string report_to_json(const TVDecompositionReport& r);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view content);

}  // namespace lulu
