// Copyright 2026 The NameDiss Authors.
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

#ifndef NAMEDISS_ERROR_H_
#define NAMEDISS_ERROR_H_

#include <stdexcept>
#include <string>

namespace namediss {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad JSONL lines, bad XML, duplicate ids, unparseable
// names, unlabeled records.
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: out-of-range thresholds, unreadable files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A checkpoint decision that the session cannot accept.
class DecisionError : public Error {
 public:
  using Error::Error;
};

// An external provider (search, affiliation lookup) could not serve a request.
class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace namediss

#endif  // NAMEDISS_ERROR_H_
