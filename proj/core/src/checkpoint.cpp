// Copyright 2026 The bimono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bimono/checkpoint.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace bimono {

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw CheckpointError(CheckpointError::Kind::Format, "checkpoint line " + std::to_string(line) + ": " + what);
}

// Canonical unsigned decimal: digits only, no leading zeros.
bool canonical_unsigned(std::string_view s) {
  if (s.empty() || s.size() > 20) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return s.size() == 1 || s.front() != '0';
}

std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  if (!canonical_unsigned(s)) format_error(line, "expected a canonical decimal, got '" + std::string(s) + "'");
  unsigned __int128 v = 0;
  for (char c : s) v = v * 10 + static_cast<unsigned>(c - '0');
  if (v > ~std::uint64_t{0}) format_error(line, "number out of range");
  return static_cast<std::uint64_t>(v);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) format_error(line_ + 1, "unexpected end of file");
    auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) format_error(line_ + 1, "missing final newline");
    std::string_view out = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_;
    return out;
  }

  std::string_view field(std::string_view key) {
    std::string_view l = next();
    if (l.size() <= key.size() || l.substr(0, key.size()) != key || l[key.size()] != ' ') {
      format_error(line_, "expected '" + std::string(key) + " ...'");
    }
    return l.substr(key.size() + 1);
  }

  bool done() const { return pos_ == text_.size(); }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

}  // namespace

std::string format_checkpoint(const Checkpoint& cp) {
  std::ostringstream out;
  out << "BIMONO-CKPT " << Checkpoint::kFormatVersion << '\n';
  out << "f " << cp.function_text << '\n';
  out << "domain " << cp.domain_text << '\n';
  out << "level " << cp.level.str() << '\n';
  out << "emitted " << cp.emitted << '\n';
  out << "frontier " << cp.frontier.size() << '\n';
  for (auto [a, b] : cp.frontier) out << a << ' ' << b << '\n';
  return out.str();
}

Checkpoint parse_checkpoint(std::string_view text) {
  LineReader in(text);
  Checkpoint cp;
  std::string_view version = in.field("BIMONO-CKPT");
  if (version != std::to_string(Checkpoint::kFormatVersion)) {
    format_error(1, "unsupported format version '" + std::string(version) + "'");
  }
  cp.function_text = std::string(in.field("f"));
  cp.domain_text = std::string(in.field("domain"));

  std::string_view level = in.field("level");
  std::string_view digits = level.substr(!level.empty() && level.front() == '-' ? 1 : 0);
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0') ||
      digits.find_first_not_of("0123456789") != std::string_view::npos || level == "-0") {
    format_error(in.line(), "level is not a canonical decimal");
  }
  cp.level = BigValue(std::string(level));

  cp.emitted = parse_u64(in.field("emitted"), in.line());
  std::uint64_t m = parse_u64(in.field("frontier"), in.line());
  for (std::uint64_t i = 0; i < m; ++i) {
    std::string_view l = in.next();
    auto sp = l.find(' ');
    if (sp == std::string_view::npos) format_error(in.line(), "expected '<a> <b>'");
    Param a = parse_u64(l.substr(0, sp), in.line());
    Param b = parse_u64(l.substr(sp + 1), in.line());
    if (!cp.frontier.empty()) {
      auto [pa, pb] = cp.frontier.back();
      if (!(pa < a && pb > b)) {
        throw CheckpointError(CheckpointError::Kind::CorruptFrontier,
                              "frontier not ordered at line " + std::to_string(in.line()));
      }
    }
    cp.frontier.emplace_back(a, b);
  }
  if (!in.done()) format_error(in.line() + 1, "trailing content");
  return cp;
}

void write_checkpoint_file(const std::filesystem::path& path, const Checkpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError(CheckpointError::Kind::Io, "cannot open " + tmp.string());
    out << format_checkpoint(cp);
    out.flush();
    if (!out) throw CheckpointError(CheckpointError::Kind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError(CheckpointError::Kind::Io, "rename to " + path.string() + ": " + ec.message());
}

Checkpoint read_checkpoint_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError(CheckpointError::Kind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str());
}

}  // namespace bimono
