#pragma once

#include <array>
#include <string>
#include <string_view>

namespace condor {

// The seven chat scenarios, in canonical inclusion order. Scaling runs take
// the first k of this list, so the order is part of the contract.
enum class TaskKind {
  RolePlaying,
  DailyChat,
  DomainQA,
  GivenMaterialProcessing,
  ResponseFormatControl,
  View,
  Creation,
};

inline constexpr std::array<TaskKind, 7> kAllTasks = {
    TaskKind::RolePlaying,          TaskKind::DailyChat,
    TaskKind::DomainQA,             TaskKind::GivenMaterialProcessing,
    TaskKind::ResponseFormatControl, TaskKind::View,
    TaskKind::Creation,
};

// Stable identifier used in JSONL records and exemplar-bank keys.
std::string_view task_id(TaskKind task);

// Human-facing name, used when filling the prompt's domain slot.
std::string_view task_name(TaskKind task);

// One-sentence description of the scenario.
std::string_view task_description(TaskKind task);

// Parses either the wire id ("role_playing") or the display name
// ("Role Playing", case-insensitive). Throws Error(Config) otherwise.
TaskKind parse_task(std::string_view text);

enum class Difficulty { Easy, Medium, Hard };

inline constexpr std::array<Difficulty, 3> kAllDifficulties = {
    Difficulty::Easy, Difficulty::Medium, Difficulty::Hard};

std::string_view difficulty_id(Difficulty level);

// Marker form used in prompt replies: "Easy", "Medium", "Hard".
std::string_view difficulty_marker(Difficulty level);

Difficulty parse_difficulty(std::string_view text);

}  // namespace condor
