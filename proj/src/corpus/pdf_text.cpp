//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/corpus/pdf_text.h"

#include <cctype>
#include <cstdint>
#include <optional>
#include <vector>

#include <zlib.h>

#include "synthroute/error.h"

namespace synthroute::corpus {
namespace {

[[noreturn]] void fail(const std::string &why) {
  throw Error(ErrorCode::kExtractionFailed, why);
}

std::optional<std::string> inflate_stream(std::string_view in) {
  z_stream zs {};
  if (inflateInit(&zs) != Z_OK) {
    return std::nullopt;
  }
  zs.next_in = reinterpret_cast<Bytef *>(const_cast<char *>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  std::string out;
  char buf[16384];
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef *>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buf, sizeof(buf) - zs.avail_out);
    if (rc == Z_BUF_ERROR && zs.avail_in == 0) {
      break;  // truncated but usable
    }
  }
  inflateEnd(&zs);
  if (rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
    return std::nullopt;
  }
  return out;
}

std::optional<std::string> ascii85_decode(std::string_view in) {
  std::string out;
  if (in.starts_with("<~")) {
    in.remove_prefix(2);
  }
  std::uint32_t group = 0;
  int count = 0;
  for (char c: in) {
    if (c == '~') {
      break;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      continue;
    }
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') {
      return std::nullopt;
    }
    group = group * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      for (int s = 24; s >= 0; s -= 8) {
        out += static_cast<char>((group >> s) & 0xFF);
      }
      group = 0;
      count = 0;
    }
  }
  if (count == 1) {
    return std::nullopt;
  }
  if (count > 0) {
    for (int k = count; k < 5; ++k) {
      group = group * 85 + 84;
    }
    for (int k = 0; k < count - 1; ++k) {
      out += static_cast<char>((group >> (24 - 8 * k)) & 0xFF);
    }
  }
  return out;
}

std::vector<std::string> filters_of(std::string_view dict) {
  std::vector<std::string> names;
  const std::size_t at = dict.find("/Filter");
  if (at == std::string_view::npos) {
    return names;
  }
  std::size_t i = at + 7;
  while (i < dict.size() && std::isspace(static_cast<unsigned char>(dict[i]))) {
    ++i;
  }
  const bool array = i < dict.size() && dict[i] == '[';
  if (array) {
    ++i;
  }
  while (i < dict.size()) {
    while (i < dict.size()
           && std::isspace(static_cast<unsigned char>(dict[i])) != 0) {
      ++i;
    }
    if (i >= dict.size() || dict[i] != '/') {
      break;
    }
    std::size_t j = i + 1;
    while (j < dict.size()
           && (std::isalnum(static_cast<unsigned char>(dict[j])) != 0)) {
      ++j;
    }
    names.emplace_back(dict.substr(i + 1, j - i - 1));
    i = j;
    if (!array) {
      break;
    }
  }
  return names;
}

std::optional<std::string> decode(std::string_view data,
                                  const std::vector<std::string> &filters) {
  std::string cur(data);
  for (const std::string &f: filters) {
    std::optional<std::string> next;
    if (f == "FlateDecode" || f == "Fl") {
      next = inflate_stream(cur);
    } else if (f == "ASCII85Decode" || f == "A85") {
      next = ascii85_decode(cur);
    }
    if (!next) {
      return std::nullopt;
    }
    cur = std::move(*next);
  }
  return cur;
}

// Collects text from one content stream.
class ContentScanner {
public:
  explicit ContentScanner(std::string_view s): s_(s) { }

  void run(std::vector<std::string> &lines) {
    lines_ = &lines;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '\r') {
          ++pos_;
        }
      } else if (c == '(') {
        operands_.push_back({ Kind::kString, literal_string(), 0.0 });
      } else if (c == '<' && peek(1) == '<') {
        pos_ += 2;
      } else if (c == '>' && peek(1) == '>') {
        pos_ += 2;
      } else if (c == '<') {
        operands_.push_back({ Kind::kString, hex_string(), 0.0 });
      } else if (c == '[') {
        operands_.push_back({ Kind::kArrayStart, {}, 0.0 });
        ++pos_;
      } else if (c == ']') {
        ++pos_;
      } else if (c == '/') {
        ++pos_;
        word();
        operands_.push_back({ Kind::kOther, {}, 0.0 });
      } else if (c == '+' || c == '-' || c == '.'
                 || std::isdigit(static_cast<unsigned char>(c)) != 0) {
        const std::string w = word();
        operands_.push_back({ Kind::kNumber, {}, std::atof(w.c_str()) });
      } else {
        const std::string op = word();
        if (op.empty()) {
          ++pos_;
          continue;
        }
        apply(op);
        operands_.clear();
      }
    }
    newline();
  }

private:
  enum class Kind { kString, kNumber, kArrayStart, kOther };
  struct Operand {
    Kind kind;
    std::string text;
    double number;
  };

  char peek(std::size_t k) const {
    return pos_ + k < s_.size() ? s_[pos_ + k] : '\0';
  }

  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '('
           || c == ')' || c == '<' || c == '>' || c == '[' || c == ']'
           || c == '{' || c == '}' || c == '/' || c == '%';
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !delimiter(s_[pos_])) {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string literal_string() {
    std::string out;
    int depth = 0;
    ++pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_++];
      if (c == '\\' && pos_ < s_.size()) {
        const char e = s_[pos_++];
        switch (e) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '\r':
          if (pos_ < s_.size() && s_[pos_] == '\n') {
            ++pos_;
          }
          break;
        case '\n': break;
        default:
          if (e >= '0' && e <= '7') {
            int v = e - '0';
            for (int k = 0; k < 2 && pos_ < s_.size() && s_[pos_] >= '0'
                            && s_[pos_] <= '7';
                 ++k) {
              v = v * 8 + (s_[pos_++] - '0');
            }
            out += static_cast<char>(v & 0xFF);
          } else {
            out += e;
          }
        }
      } else if (c == '(') {
        ++depth;
        out += c;
      } else if (c == ')') {
        if (depth == 0) {
          break;
        }
        --depth;
        out += c;
      } else {
        out += c;
      }
    }
    return out;
  }

  std::string hex_string() {
    std::string digits;
    ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '>') {
      if (std::isxdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
        digits += s_[pos_];
      }
      ++pos_;
    }
    ++pos_;
    if (digits.size() % 2 == 1) {
      digits += '0';
    }
    std::string out;
    for (std::size_t i = 0; i < digits.size(); i += 2) {
      out += static_cast<char>(std::stoi(digits.substr(i, 2), nullptr, 16));
    }
    return out;
  }

  void newline() {
    if (!line_.empty()) {
      lines_->push_back(line_);
      line_.clear();
    }
  }

  void apply(const std::string &op) {
    if (op == "Tj") {
      if (!operands_.empty() && operands_.back().kind == Kind::kString) {
        line_ += operands_.back().text;
      }
    } else if (op == "'" || op == "\"") {
      newline();
      if (!operands_.empty() && operands_.back().kind == Kind::kString) {
        line_ += operands_.back().text;
      }
    } else if (op == "TJ") {
      std::size_t start = operands_.size();
      while (start > 0 && operands_[start - 1].kind != Kind::kArrayStart) {
        --start;
      }
      for (std::size_t k = start; k < operands_.size(); ++k) {
        if (operands_[k].kind == Kind::kString) {
          line_ += operands_[k].text;
        } else if (operands_[k].kind == Kind::kNumber
                   && operands_[k].number < -200.0) {
          line_ += ' ';
        }
      }
    } else if (op == "Td" || op == "TD" || op == "T*" || op == "Tm"
               || op == "ET") {
      newline();
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<Operand> operands_;
  std::string line_;
  std::vector<std::string> *lines_ = nullptr;
};

std::string trim_right(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.pop_back();
  }
  return s;
}

}  // namespace

std::string extract_pdf_text(std::string_view pdf) {
  const std::size_t head = pdf.find("%PDF-");
  if (head == std::string_view::npos || head > 1024) {
    fail("document is not a PDF");
  }

  std::vector<std::string> lines;
  std::size_t cursor = 0;
  while (true) {
    const std::size_t kw = pdf.find("stream", cursor);
    if (kw == std::string_view::npos) {
      break;
    }
    cursor = kw + 6;
    // Skip "endstream" and keywords that merely contain "stream".
    if (kw >= 3 && pdf.substr(kw - 3, 3) == "end") {
      continue;
    }
    std::size_t data = kw + 6;
    if (data < pdf.size() && pdf[data] == '\r') {
      ++data;
    }
    if (data < pdf.size() && pdf[data] == '\n') {
      ++data;
    } else if (data >= pdf.size() || pdf[data - 1] != '\r') {
      continue;
    }
    const std::size_t end = pdf.find("endstream", data);
    if (end == std::string_view::npos) {
      break;
    }
    cursor = end + 9;

    const std::size_t obj = pdf.rfind(" obj", kw);
    const std::string_view dict =
        obj == std::string_view::npos ? pdf.substr(0, kw)
                                      : pdf.substr(obj, kw - obj);
    if (dict.find("/Image") != std::string_view::npos
        || dict.find("/FontFile") != std::string_view::npos
        || dict.find("/Length1") != std::string_view::npos) {
      continue;
    }
    const std::optional<std::string> body =
        decode(pdf.substr(data, end - data), filters_of(dict));
    if (!body || body->find("BT") == std::string::npos) {
      continue;
    }
    ContentScanner(*body).run(lines);
  }

  std::string text;
  for (std::string &l: lines) {
    l = trim_right(std::move(l));
    if (!l.empty()) {
      text += l;
      text += '\n';
    }
  }
  if (text.empty()) {
    fail("PDF has no text layer");
  }
  return text;
}

}  // namespace synthroute::corpus
