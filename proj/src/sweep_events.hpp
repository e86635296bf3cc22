#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "model.hpp"

namespace rcusp {

/// Sweep event kinds. Scp/Ecp mark the start and end of a compulsory part,
/// Ekcp/Skcp the end and start of a slack reservation window, Pr that an
/// activity becomes a pruning candidate. Skcp occurs only when sweeping
/// right to left.
enum class EventKind { Scp, Ecp, Pr, Ekcp, Skcp };

struct Event {
  EventKind kind;
  ActivityId activity;
  Time date;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Dated event queue, ordered ascending for the left-to-right sweep and
/// descending for the right-to-left one. Extraction yields every event at
/// the extreme date at once. Mid-sweep insertions must land strictly beyond
/// the last extracted date in sweep direction; violating that invalidates
/// profile data already computed, so it throws.
class EventQueue {
 public:
  explicit EventQueue(bool ascending) : ascending_(ascending) {}

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  void push(Event event);

  /// Removes and returns all events at the extreme date; `out` is cleared
  /// first. Requires a non-empty queue.
  Time extractFront(std::vector<Event>& out);

  /// The extreme date among remaining events, or nullopt when exhausted.
  std::optional<Time> nextDate() const;

 private:
  bool before(const Event& a, const Event& b) const;
  void siftUp(std::size_t i);
  void siftDown(std::size_t i);

  bool ascending_;
  std::vector<Event> heap_;
  std::optional<Time> last_extracted_;
};

/// Collection of activities whose slack reservation window overlaps the
/// sweep line, ordered by decreasing height (ties to the lower id).
/// Entries are never removed eagerly; the expiry predicate decides at query
/// time whether the top still overlaps, and expired tops are dropped then.
class LazyActivityHeap {
 public:
  /// expired(activity, sweep_pos) must return true once the activity's
  /// window no longer overlaps the line at sweep_pos.
  using ExpiryFn = std::function<bool(ActivityId, Time)>;

  explicit LazyActivityHeap(ExpiryFn expired) : expired_(std::move(expired)) {}

  void insert(ActivityId activity, Time height);

  /// Height of the tallest non-expired entry, 0 when none. Expired entries
  /// encountered on top are removed as a side effect.
  Time maxHeight(Time sweep_pos);

  /// Same, ignoring `excluded`; falls back to the second tallest when the
  /// top is the excluded activity.
  Time maxHeightExcluding(Time sweep_pos, ActivityId excluded);

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Entry {
    Time height;
    ActivityId activity;
  };

  static bool below(const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.activity > b.activity;
  }

  void purge(Time sweep_pos);
  void siftUp(std::size_t i);
  void siftDown(std::size_t i);

  std::vector<Entry> heap_;
  ExpiryFn expired_;
};

}  // namespace rcusp
