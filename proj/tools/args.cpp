#include "args.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cohgeom/errors.hpp"

namespace cohgeom::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw UsageError("cannot parse number '" + std::string(whole) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> parts;
  if (trim(text).empty()) return parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Complex parse_complex(std::string_view whole) {
  const std::string_view text = trim(whole);
  if (text.empty()) throw UsageError("empty complex number");
  const char last = text.back();
  if (last != 'i' && last != 'j') return {parse_double(text, whole), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The sign separating real and imaginary parts is the last one not
  // belonging to an exponent.
  std::size_t split_at = 0;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string_view re_text = body.substr(0, split_at);
  std::string_view im_text = body.substr(split_at);
  double im = 1.0;
  if (im_text.empty() || im_text == "+") im = 1.0;
  else if (im_text == "-") im = -1.0;
  else im = parse_double(im_text, whole);
  const double re = re_text.empty() ? 0.0 : parse_double(re_text, whole);
  return {re, im};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (auto part : split(text)) out.push_back(parse_complex(part));
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text)) out.push_back(parse_double(part, part));
  return out;
}

std::string format_real(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) throw UsageError("--config needs a path");
      path = *std::next(it);
      it = args.erase(it, it + 2);
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  nlohmann::ordered_json config;
  try {
    config = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed config " + path + ": " + e.what());
  }
  if (!config.is_object()) throw UsageError("config " + path + " must hold a JSON object");

  auto given = [&args](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  auto scalar = [](const nlohmann::ordered_json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_real(v.get<double>());
    if (v.is_number() || v.is_boolean()) return v.dump();
    throw UsageError("config values must be scalars or flat arrays");
  };

  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    if (given(flag) || value.is_null()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& e : value) joined += (joined.empty() ? "" : ",") + scalar(e);
      args.push_back(flag + "=" + joined);
    } else {
      // The joined form keeps values such as "-i" from reading as flags.
      args.push_back(flag + "=" + scalar(value));
    }
  }
  return args;
}

}  // namespace cohgeom::cli
