// Copyright 2026 The balaw Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace balaw {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or input description (CLI exit code 2).
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

/// A state left the admissible region: amplitude guard, vacuum-like
/// degeneracy 1+w2 <= 0, hyperbolicity loss, log domain (exit code 3).
class guard_error : public error {
public:
    explicit guard_error(const std::string& msg) : error(msg) {}
};

/// An iterative solve failed to converge, a CFL or boundary condition was
/// violated, or a fit was degenerate (exit code 4).
class solver_error : public error {
public:
    explicit solver_error(const std::string& msg) : error(msg) {}
};

/// File I/O failure (exit code 4).
class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

} // namespace balaw
