// Copyright 2026 The Pursuit Authors. All rights reserved.
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

#ifndef PURSUIT_ERRORS_HPP_
#define PURSUIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

// A numeric argument outside its documented domain (negative time step,
// nonpositive cell size, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally inconsistent input, e.g. trajectories of different lengths.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact game-value recursion visited more nodes than its budget allows.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t budget)
      : std::runtime_error(what), budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

enum class Robot { kPursuer, kEvader };

inline const char* robot_name(Robot robot) {
  return robot == Robot::kPursuer ? "pursuer" : "evader";
}

// Every branch of a robot's decision tree is blocked by obstacles and so is
// its current position.
class RobotTrapped : public std::runtime_error {
 public:
  static constexpr long kUnknownStep = -1;

  explicit RobotTrapped(Robot robot, long step = kUnknownStep)
      : std::runtime_error(message(robot, step)), robot_(robot), step_(step) {}

  Robot robot() const { return robot_; }
  long step() const { return step_; }

 private:
  static std::string message(Robot robot, long step) {
    std::string msg = std::string(robot_name(robot)) + " is trapped";
    if (step != kUnknownStep) msg += " at step " + std::to_string(step);
    return msg + ": every branch and the stay-put position are blocked";
  }

  Robot robot_;
  long step_;
};

// Scenario validation failure. Carries the names of all violated fields.
class ScenarioError : public std::invalid_argument {
 public:
  explicit ScenarioError(std::vector<std::string> problems)
      : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string msg = "invalid scenario:";
    for (const auto& p : problems) msg += " " + p + ";";
    return msg;
  }

  std::vector<std::string> problems_;
};

}  // namespace pursuit

#endif  // PURSUIT_ERRORS_HPP_
