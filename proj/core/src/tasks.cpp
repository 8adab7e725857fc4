#include "condor/tasks.hpp"

#include "condor/errors.hpp"
#include "condor/text.hpp"

namespace condor {

std::string_view task_id(TaskKind task) {
  switch (task) {
    case TaskKind::RolePlaying: return "role_playing";
    case TaskKind::DailyChat: return "daily_chat";
    case TaskKind::DomainQA: return "domain_qa";
    case TaskKind::GivenMaterialProcessing: return "given_material_processing";
    case TaskKind::ResponseFormatControl: return "response_format_control";
    case TaskKind::View: return "view";
    case TaskKind::Creation: return "creation";
  }
  return "unknown";
}

std::string_view task_name(TaskKind task) {
  switch (task) {
    case TaskKind::RolePlaying: return "Role Playing";
    case TaskKind::DailyChat: return "Daily Chat";
    case TaskKind::DomainQA: return "Domain QA";
    case TaskKind::GivenMaterialProcessing: return "Given Material Processing";
    case TaskKind::ResponseFormatControl: return "Response Format Control";
    case TaskKind::View: return "View";
    case TaskKind::Creation: return "Creation";
  }
  return "Unknown";
}

std::string_view task_description(TaskKind task) {
  switch (task) {
    case TaskKind::RolePlaying:
      return "Engage in simulated conversations or behaviors by assuming different roles to "
             "explore various perspectives or scenarios.";
    case TaskKind::DailyChat:
      return "Participate in casual conversations, including greetings, small talk, and sharing "
             "everyday experiences.";
    case TaskKind::DomainQA:
      return "Provide specialized and accurate answers to questions within a specific domain or "
             "field.";
    case TaskKind::GivenMaterialProcessing:
      return "Analyze, process, and summarize given texts, data, or other materials.";
    case TaskKind::ResponseFormatControl:
      return "Adjust the format, style, and expression of responses according to specified "
             "requirements.";
    case TaskKind::View:
      return "Offer personal opinions, insights, or perspectives on a particular topic.";
    case TaskKind::Creation:
      return "Generate new content such as articles, stories, poetry, designs, etc.";
  }
  return "";
}

TaskKind parse_task(std::string_view text) {
  std::string norm = normalize_label(text);
  for (TaskKind task : kAllTasks) {
    if (norm == task_id(task) || norm == normalize_label(task_name(task))) {
      return task;
    }
  }
  raise(ErrorKind::Config, "unknown task: " + std::string(text));
}

std::string_view difficulty_id(Difficulty level) {
  switch (level) {
    case Difficulty::Easy: return "easy";
    case Difficulty::Medium: return "medium";
    case Difficulty::Hard: return "hard";
  }
  return "unknown";
}

std::string_view difficulty_marker(Difficulty level) {
  switch (level) {
    case Difficulty::Easy: return "Easy";
    case Difficulty::Medium: return "Medium";
    case Difficulty::Hard: return "Hard";
  }
  return "Unknown";
}

Difficulty parse_difficulty(std::string_view text) {
  std::string norm = normalize_label(text);
  for (Difficulty level : kAllDifficulties) {
    if (norm == difficulty_id(level)) {
      return level;
    }
  }
  raise(ErrorKind::Config, "unknown difficulty: " + std::string(text));
}

}  // namespace condor
