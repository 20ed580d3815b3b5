#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conjtok {

// Corrupt analyzer output: a morpheme line that cannot be parsed.
class MalformedLineError : public std::runtime_error {
public:
  MalformedLineError(const std::string& what, std::size_t line_number)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
      line_number_(line_number) {}

  std::size_t line_number() const { return line_number_; }

private:
  std::size_t line_number_;
};

// Stream ended in the middle of a sentence (no terminating EOS).
class MissingEosError : public std::runtime_error {
public:
  explicit MissingEosError(std::size_t line_number)
    : std::runtime_error("line " + std::to_string(line_number) +
                         ": input ended without EOS terminator"),
      line_number_(line_number) {}

  std::size_t line_number() const { return line_number_; }

private:
  std::size_t line_number_;
};

// Conjugation rule file problems, reported eagerly at load time.
class TableError : public std::runtime_error {
public:
  enum class Kind { BadRuleRow, DuplicateRule, MissingPlainForm };

  TableError(Kind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// (conjugation type, conjugation form) pair absent from the table.
class UnknownConjugationError : public std::runtime_error {
public:
  UnknownConjugationError(const std::string& conj_type, const std::string& conj_form)
    : std::runtime_error("no rule for conjugation (" + conj_type + ", " + conj_form + ")") {}
};

// Lemma does not end with the suffix the rule strips.
class LemmaMismatchError : public std::runtime_error {
public:
  LemmaMismatchError(const std::string& lemma, const std::string& strip)
    : std::runtime_error("lemma '" + lemma + "' does not end with '" + strip + "'") {}
};

class EmptyCorpusError : public std::runtime_error {
public:
  EmptyCorpusError() : std::runtime_error("corpus is empty") {}
};

}  // namespace conjtok
