#pragma once

#include "abacus/classifier.hpp"
#include "abacus/serialization.hpp"
#include "abacus/verbalizer.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace abacus {

enum class TaskKind { SetNumber, ReadNumber, SetAndSay };

std::string_view to_string(TaskKind kind);
TaskKind parse_task_kind(std::string_view name);

struct Task {
  TaskKind kind = TaskKind::SetNumber;
  std::optional<Natural> target;        // SET_NUMBER, SET_AND_SAY
  std::optional<AbacusConfig> printed;  // READ_NUMBER
  Register reg = Register::VirtualAbacus;
  std::optional<Language> language;     // SET_AND_SAY only
  std::size_t rod_count = kDefaultRodCount;

  /// Throws InvalidSpec when fields do not fit the kind, Overflow when the
  /// target needs more rods.
  void validate() const;
  Natural expected_value() const;
};

struct Evaluation {
  bool correct = false;
  TechniqueReport report;
};

/// Replays the trace server-side and grades it. SET_NUMBER: final value is
/// the target. READ_NUMBER: the answer is the printed value. SET_AND_SAY:
/// both the final value and the spoken answer name the target.
Evaluation evaluate_attempt(const Task& task, const Trace& trace, const std::optional<std::string>& answer);

struct Attempt {
  std::string attempt_id;
  Task task;
  Trace trace;
  std::optional<std::string> answer;
  std::string created_at;
  Evaluation evaluation;  // derived from the trace; recomputed on load
};

struct Session {
  std::string id;
  std::string participant;
  std::string created_at;
  std::vector<Attempt> attempts;
};

struct AttemptSummary {
  std::size_t index = 0;
  TaskKind kind = TaskKind::SetNumber;
  Natural expected = 0;
  bool correct = false;
  std::string technique_id;
  std::size_t gestures = 0;
  bool used_see_number = false;
};

struct SessionSummary {
  std::size_t attempts = 0;
  std::size_t correct = 0;
  std::size_t gestures = 0;
  std::size_t see_number_attempts = 0;
  std::map<ReasoningTag, std::size_t> tag_frequencies;
  std::vector<AttemptSummary> per_attempt;
};

SessionSummary session_report(const Session& session);

void to_json(json& j, const TaskKind& kind);
void to_json(json& j, const Task& task);
Task task_from_json(const json& j, std::size_t default_rods = kDefaultRodCount);
void to_json(json& j, const Attempt& attempt);
void to_json(json& j, const Session& session);
void to_json(json& j, const SessionSummary& summary);

/// Sessions persisted as one append-only JSON-lines file each under a data
/// directory. Writes to one session are serialized; reads run concurrently.
class SessionStore {
 public:
  using Clock = std::function<std::string()>;

  explicit SessionStore(std::filesystem::path data_dir, Clock clock = {});

  /// Participant labels are pseudonyms: 1..64 characters from [A-Za-z0-9_.-].
  std::string create(const std::string& participant);

  /// Evaluates and records an attempt. With an attempt id that was already
  /// recorded, returns the stored evaluation and writes nothing.
  Evaluation add_attempt(const std::string& session_id, const std::optional<std::string>& attempt_id,
                         const Task& task, const Trace& trace, const std::optional<std::string>& answer);

  Session get(const std::string& session_id) const;
  std::vector<std::string> ids() const;

  const std::filesystem::path& data_dir() const { return data_dir_; }

 private:
  struct Entry {
    mutable std::shared_mutex mutex;
    Session session;
  };

  std::shared_ptr<Entry> find(const std::string& session_id) const;
  void load(const std::filesystem::path& file);
  std::filesystem::path file_of(const std::string& session_id) const;

  std::filesystem::path data_dir_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

/// Reads a session file and re-derives every evaluation from its trace.
Session load_session_file(const std::filesystem::path& file);

}  // namespace abacus
