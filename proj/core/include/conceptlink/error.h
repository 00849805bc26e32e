// Copyright 2026 The Conceptlink Authors.
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


#ifndef CONCEPTLINK_ERROR_H_
#define CONCEPTLINK_ERROR_H_

#include <stdexcept>
#include <string>

namespace conceptlink {

// Broad error classes. The command-line tool maps kDomain to exit status 1
// and kParse/kIo to exit status 2.
enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kIo,
  kDomain,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error ParseError(const std::string &message) {
  return Error(ErrorKind::kParse, message);
}

inline Error IoError(const std::string &message) {
  return Error(ErrorKind::kIo, message);
}

inline Error DomainError(const std::string &message) {
  return Error(ErrorKind::kDomain, message);
}

inline Error InvalidArgument(const std::string &message) {
  return Error(ErrorKind::kInvalidArgument, message);
}

}  // namespace conceptlink

#endif  // CONCEPTLINK_ERROR_H_
