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

#ifndef REPLIKA_SEXPR_H_
#define REPLIKA_SEXPR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace replika {

// Source position of a token or form, 1-based.
struct SourcePos {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, SourcePos pos)
      : std::runtime_error(msg + " at line " + std::to_string(pos.line) +
                           ", column " + std::to_string(pos.col)),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

// Parenthesized symbolic expression. Atom symbols are case-insensitive and
// normalized to lower case; keywords keep a leading ':'. ";" starts a
// comment running to end of line.
struct SExpr {
  enum class Kind { kAtom, kString, kList };
  Kind kind = Kind::kAtom;
  std::string text;          // atom symbol or string payload
  std::vector<SExpr> items;  // list members
  SourcePos pos;

  bool IsAtom() const { return kind == Kind::kAtom; }
  bool IsString() const { return kind == Kind::kString; }
  bool IsList() const { return kind == Kind::kList; }
  bool IsKeyword() const {
    return IsAtom() && !text.empty() && text[0] == ':';
  }
};

// Reads every top-level form in `text`. Throws ParseError on unbalanced
// parentheses, unterminated strings, or stray characters.
std::vector<SExpr> ReadForms(const std::string& text);

// Reads exactly one form; rejects leftover input.
SExpr ReadForm(const std::string& text);

}  // namespace replika

#endif  // REPLIKA_SEXPR_H_
