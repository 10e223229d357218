// Copyright 2026 The Replika Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "replika/sexpr.hpp"

#include <cctype>

namespace replika {
namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  std::vector<SExpr> ReadAll() {
    std::vector<SExpr> forms;
    SkipSpace();
    while (!AtEnd()) {
      forms.push_back(ReadOne());
      SkipSpace();
    }
    return forms;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  char Advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  SourcePos Here() const { return SourcePos{line_, col_}; }

  void SkipSpace() {
    while (!AtEnd()) {
      char c = Peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == ';') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
  }

  SExpr ReadOne() {
    SkipSpace();
    if (AtEnd()) throw ParseError("unexpected end of input", Here());
    SourcePos start = Here();
    char c = Peek();
    if (c == '(') {
      Advance();
      SExpr list;
      list.kind = SExpr::Kind::kList;
      list.pos = start;
      SkipSpace();
      while (!AtEnd() && Peek() != ')') {
        list.items.push_back(ReadOne());
        SkipSpace();
      }
      if (AtEnd()) throw ParseError("missing ')'", start);
      Advance();  // ')'
      return list;
    }
    if (c == ')') throw ParseError("unexpected ')'", start);
    if (c == '"') {
      Advance();
      SExpr str;
      str.kind = SExpr::Kind::kString;
      str.pos = start;
      while (!AtEnd() && Peek() != '"') str.text.push_back(Advance());
      if (AtEnd()) throw ParseError("unterminated string", start);
      Advance();  // closing quote
      return str;
    }
    SExpr atom;
    atom.kind = SExpr::Kind::kAtom;
    atom.pos = start;
    while (!AtEnd()) {
      char d = Peek();
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' ||
          d == ')' || d == ';' || d == '"') {
        break;
      }
      atom.text.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(d))));
      Advance();
    }
    return atom;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> ReadForms(const std::string& text) {
  return Reader(text).ReadAll();
}

SExpr ReadForm(const std::string& text) {
  std::vector<SExpr> forms = ReadForms(text);
  if (forms.empty()) throw ParseError("empty input", SourcePos{});
  if (forms.size() > 1)
    throw ParseError("expected a single form", forms[1].pos);
  return forms[0];
}

}  // namespace replika
