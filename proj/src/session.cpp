#include "abacus/session.hpp"

#include "abacus/error.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <random>

namespace abacus {

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string random_id(const char* prefix) {
  static std::mutex m;
  static std::mt19937_64 engine{std::random_device{}()};
  std::lock_guard lock(m);
  static constexpr char hex[] = "0123456789abcdef";
  std::string id = prefix;
  std::uint64_t bits = engine();
  for (int i = 0; i < 16; ++i, bits >>= 4) id += hex[bits & 0xf];
  return id;
}

bool valid_label(const std::string& s, std::size_t max_len) {
  if (s.empty() || s.size() > max_len) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-' || c == '.';
    if (!ok) return false;
  }
  return s.front() != '.';
}

void append_line(const std::filesystem::path& file, const json& line) {
  std::ofstream out(file, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << line.dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write failed on " + file.string());
}

bool used_see_number(const Trace& trace) {
  if (trace.see_number_initially_on) return true;
  for (const auto& g : trace.gestures) {
    if (const auto* s = std::get_if<IconSeeNumber>(&g); s && s->on) return true;
  }
  return false;
}

json attempt_line(const Attempt& a) {
  json line = a;
  line["type"] = "attempt";
  return line;
}

}  // namespace

std::string_view to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::SetNumber: return "SET_NUMBER";
    case TaskKind::ReadNumber: return "READ_NUMBER";
    case TaskKind::SetAndSay: return "SET_AND_SAY";
  }
  return "?";
}

TaskKind parse_task_kind(std::string_view name) {
  for (auto k : {TaskKind::SetNumber, TaskKind::ReadNumber, TaskKind::SetAndSay}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError(ErrorCode::InvalidSpec, "unknown task kind: " + std::string(name));
}

void Task::validate() const {
  if (rod_count == 0) throw DomainError(ErrorCode::InvalidSpec, "a task needs at least one rod");
  switch (kind) {
    case TaskKind::SetNumber:
    case TaskKind::SetAndSay:
      if (!target) throw DomainError(ErrorCode::InvalidSpec, std::string(to_string(kind)) + " needs a target");
      if (*target >= power_of_ten(rod_count)) {
        throw DomainError(ErrorCode::Overflow, to_decimal(*target) + " does not fit on " +
                                                   std::to_string(rod_count) + " rods");
      }
      if (kind == TaskKind::SetAndSay && !language) {
        throw DomainError(ErrorCode::InvalidSpec, "SET_AND_SAY needs a language");
      }
      if (kind == TaskKind::SetNumber && language) {
        throw DomainError(ErrorCode::InvalidSpec, "only SET_AND_SAY carries a language");
      }
      break;
    case TaskKind::ReadNumber:
      if (!printed) throw DomainError(ErrorCode::InvalidSpec, "READ_NUMBER needs a printed config");
      if (printed->rod_count() != rod_count) {
        throw DomainError(ErrorCode::InvalidSpec, "printed config has " + std::to_string(printed->rod_count()) +
                                                      " rods, task has " + std::to_string(rod_count));
      }
      if (language) throw DomainError(ErrorCode::InvalidSpec, "only SET_AND_SAY carries a language");
      break;
  }
}

Natural Task::expected_value() const {
  return kind == TaskKind::ReadNumber ? read_value(*printed) : *target;
}

Evaluation evaluate_attempt(const Task& task, const Trace& trace, const std::optional<std::string>& answer) {
  task.validate();
  Trace replayed = trace;
  replayed.reg = task.reg;

  Evaluation e;
  switch (task.kind) {
    case TaskKind::SetNumber:
      e.report = classify(replayed, *task.target, AbacusConfig(task.rod_count));
      e.correct = e.report.correct;
      break;
    case TaskKind::ReadNumber: {
      if (!answer) throw DomainError(ErrorCode::InvalidArgument, "READ_NUMBER needs an answer");
      const Natural value = read_value(*task.printed);
      e.report = classify(replayed, value, *task.printed);
      e.correct = parse_natural(*answer) == value;
      break;
    }
    case TaskKind::SetAndSay: {
      if (!answer) throw DomainError(ErrorCode::InvalidArgument, "SET_AND_SAY needs the spoken answer");
      e.report = classify(replayed, *task.target, AbacusConfig(task.rod_count));
      const std::int64_t said = parse_words(*answer, *task.language);
      e.correct = e.report.correct && Natural(said) == *task.target;
      break;
    }
  }
  return e;
}

SessionSummary session_report(const Session& session) {
  SessionSummary s;
  for (std::size_t i = 0; i < session.attempts.size(); ++i) {
    const Attempt& a = session.attempts[i];
    AttemptSummary row;
    row.index = i;
    row.kind = a.task.kind;
    row.expected = a.task.expected_value();
    row.correct = a.evaluation.correct;
    row.technique_id = a.evaluation.report.technique_id;
    row.gestures = gesture_count(a.trace);
    row.used_see_number = used_see_number(a.trace);

    ++s.attempts;
    if (row.correct) ++s.correct;
    s.gestures += row.gestures;
    if (row.used_see_number) ++s.see_number_attempts;
    for (ReasoningTag tag : a.evaluation.report.tags) ++s.tag_frequencies[tag];
    s.per_attempt.push_back(std::move(row));
  }
  return s;
}

void to_json(json& j, const TaskKind& kind) { j = std::string(to_string(kind)); }

void to_json(json& j, const Task& task) {
  j = {{"kind", task.kind}, {"register", task.reg}, {"rod_count", task.rod_count}};
  if (task.target) j["target"] = *task.target;
  if (task.printed) j["config"] = *task.printed;
  if (task.language) j["language"] = *task.language;
}

Task task_from_json(const json& j, std::size_t default_rods) {
  Task task;
  task.kind = parse_task_kind(j.at("kind").get<std::string>());
  task.rod_count = j.value("rod_count", default_rods);
  if (j.contains("target")) task.target = j.at("target").get<Natural>();
  if (j.contains("config")) {
    task.printed = j.at("config").get<AbacusConfig>();
    if (!j.contains("rod_count")) task.rod_count = task.printed->rod_count();
  }
  if (j.contains("register")) task.reg = j.at("register").get<Register>();
  if (j.contains("language")) task.language = j.at("language").get<Language>();
  task.validate();
  return task;
}

void to_json(json& j, const Attempt& attempt) {
  j = {{"attempt_id", attempt.attempt_id},
       {"task", attempt.task},
       {"trace", attempt.trace},
       {"created_at", attempt.created_at},
       {"correct", attempt.evaluation.correct},
       {"report", attempt.evaluation.report}};
  j["answer"] = attempt.answer ? json(*attempt.answer) : json(nullptr);
}

void to_json(json& j, const Session& session) {
  j = {{"id", session.id},
       {"participant", session.participant},
       {"created_at", session.created_at},
       {"attempts", session.attempts},
       {"summary", session_report(session)}};
}

void to_json(json& j, const SessionSummary& summary) {
  json tags = json::object();
  for (const auto& [tag, count] : summary.tag_frequencies) tags[std::string(to_string(tag))] = count;
  json rows = json::array();
  for (const auto& r : summary.per_attempt) {
    rows.push_back({{"index", r.index},
                    {"kind", r.kind},
                    {"expected", r.expected},
                    {"correct", r.correct},
                    {"technique_id", r.technique_id},
                    {"gestures", r.gestures},
                    {"used_see_number", r.used_see_number}});
  }
  j = {{"attempts", summary.attempts},
       {"correct", summary.correct},
       {"gestures", summary.gestures},
       {"see_number_attempts", summary.see_number_attempts},
       {"tag_frequencies", std::move(tags)},
       {"per_attempt", std::move(rows)}};
}

Session load_session_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DomainError(ErrorCode::NotFound, "cannot open " + file.string());
  Session session;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "session") {
      session.id = j.at("id").get<std::string>();
      session.participant = j.at("participant").get<std::string>();
      session.created_at = j.at("created_at").get<std::string>();
      header = true;
    } else if (type == "attempt") {
      Attempt a;
      a.attempt_id = j.at("attempt_id").get<std::string>();
      a.task = task_from_json(j.at("task"));
      a.trace = j.at("trace").get<Trace>();
      if (j.contains("answer") && !j.at("answer").is_null()) a.answer = j.at("answer").get<std::string>();
      a.created_at = j.at("created_at").get<std::string>();
      a.evaluation = evaluate_attempt(a.task, a.trace, a.answer);
      session.attempts.push_back(std::move(a));
    }
  }
  if (!header) throw DomainError(ErrorCode::InvalidSpec, file.string() + " has no session header");
  return session;
}

SessionStore::SessionStore(std::filesystem::path data_dir, Clock clock)
    : data_dir_(std::move(data_dir)), clock_(clock ? std::move(clock) : Clock(utc_now)) {
  std::filesystem::create_directories(data_dir_);
  for (const auto& entry : std::filesystem::directory_iterator(data_dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") load(entry.path());
  }
}

void SessionStore::load(const std::filesystem::path& file) {
  auto entry = std::make_shared<Entry>();
  entry->session = load_session_file(file);
  sessions_[entry->session.id] = std::move(entry);
}

std::filesystem::path SessionStore::file_of(const std::string& session_id) const {
  return data_dir_ / (session_id + ".jsonl");
}

std::string SessionStore::create(const std::string& participant) {
  if (!valid_label(participant, 64)) {
    throw DomainError(ErrorCode::InvalidArgument,
                      "participant labels are pseudonyms of 1-64 characters from [A-Za-z0-9_.-]");
  }
  auto entry = std::make_shared<Entry>();
  entry->session.participant = participant;
  entry->session.created_at = clock_();

  std::unique_lock lock(mutex_);
  do {
    entry->session.id = random_id("s-");
  } while (sessions_.contains(entry->session.id));
  append_line(file_of(entry->session.id), {{"type", "session"},
                                          {"id", entry->session.id},
                                          {"participant", participant},
                                          {"created_at", entry->session.created_at}});
  sessions_[entry->session.id] = entry;
  return entry->session.id;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& session_id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw DomainError(ErrorCode::NotFound, "no session " + session_id);
  return it->second;
}

Evaluation SessionStore::add_attempt(const std::string& session_id, const std::optional<std::string>& attempt_id,
                                     const Task& task, const Trace& trace,
                                     const std::optional<std::string>& answer) {
  if (attempt_id && !valid_label(*attempt_id, 128)) {
    throw DomainError(ErrorCode::InvalidArgument, "attempt ids use 1-128 characters from [A-Za-z0-9_.-]");
  }
  const auto entry = find(session_id);
  std::unique_lock lock(entry->mutex);
  if (attempt_id) {
    for (const auto& a : entry->session.attempts) {
      if (a.attempt_id == *attempt_id) return a.evaluation;
    }
  }

  Attempt a;
  a.task = task;
  a.trace = trace;
  a.trace.reg = task.reg;
  a.answer = answer;
  a.evaluation = evaluate_attempt(task, a.trace, answer);
  a.created_at = clock_();
  a.attempt_id = attempt_id ? *attempt_id : random_id("a-");
  append_line(file_of(session_id), attempt_line(a));
  entry->session.attempts.push_back(a);
  return a.evaluation;
}

Session SessionStore::get(const std::string& session_id) const {
  const auto entry = find(session_id);
  std::shared_lock lock(entry->mutex);
  return entry->session;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, _] : sessions_) out.push_back(id);
  return out;
}

}  // namespace abacus
