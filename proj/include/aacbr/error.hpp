#pragma once

#include <stdexcept>

namespace aacbr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The default argument's characterisation is not the least element.
struct DefaultNotLeast : Error { using Error::Error; };
/// Two distinct cases share an id.
struct DuplicateId : Error { using Error::Error; };
/// A case carries an outcome that is neither the default nor the other label.
struct UnknownOutcome : Error { using Error::Error; };
/// An operation that requires a coherent casebase received an incoherent one.
struct IncoherentCasebase : Error { using Error::Error; };
/// A labelled argument with the same characterisation is already present.
struct DuplicateCharacterisation : Error { using Error::Error; };
/// simple_add was given a graph that cannot come from a coherent casebase.
struct IncoherentSource : Error { using Error::Error; };
/// simple_add was given a case less specific than an argument already present.
struct OrderViolation : Error { using Error::Error; };
/// A brute-force oracle was asked to enumerate beyond its guard.
struct TooLarge : Error { using Error::Error; };
/// The generator cannot draw that many distinct characterisations.
struct UniverseTooSmall : Error { using Error::Error; };
/// Malformed input file.
struct ParseError : Error { using Error::Error; };

}  // namespace aacbr
