#include "sweep_events.hpp"

#include <stdexcept>
#include <utility>

namespace rcusp {

bool EventQueue::before(const Event& a, const Event& b) const {
  if (a.date != b.date) return ascending_ ? a.date < b.date : a.date > b.date;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.activity < b.activity;
}

void EventQueue::push(Event event) {
  if (last_extracted_) {
    const bool beyond = ascending_ ? event.date > *last_extracted_
                                   : event.date < *last_extracted_;
    if (!beyond) {
      throw std::logic_error("EventQueue: insertion behind the sweep line");
    }
  }
  heap_.push_back(event);
  siftUp(heap_.size() - 1);
}

Time EventQueue::extractFront(std::vector<Event>& out) {
  if (heap_.empty()) throw std::logic_error("EventQueue: extract from empty queue");
  out.clear();
  const Time date = heap_.front().date;
  while (!heap_.empty() && heap_.front().date == date) {
    out.push_back(heap_.front());
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) siftDown(0);
  }
  last_extracted_ = date;
  return date;
}

std::optional<Time> EventQueue::nextDate() const {
  if (heap_.empty()) return std::nullopt;
  return heap_.front().date;
}

void EventQueue::siftUp(std::size_t i) {
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!before(heap_[i], heap_[parent])) break;
    std::swap(heap_[i], heap_[parent]);
    i = parent;
  }
}

void EventQueue::siftDown(std::size_t i) {
  const std::size_t n = heap_.size();
  while (true) {
    std::size_t best = i;
    const std::size_t left = 2 * i + 1;
    const std::size_t right = 2 * i + 2;
    if (left < n && before(heap_[left], heap_[best])) best = left;
    if (right < n && before(heap_[right], heap_[best])) best = right;
    if (best == i) return;
    std::swap(heap_[i], heap_[best]);
    i = best;
  }
}

void LazyActivityHeap::insert(ActivityId activity, Time height) {
  heap_.push_back(Entry{height, activity});
  siftUp(heap_.size() - 1);
}

void LazyActivityHeap::purge(Time sweep_pos) {
  while (!heap_.empty() && expired_(heap_.front().activity, sweep_pos)) {
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) siftDown(0);
  }
}

Time LazyActivityHeap::maxHeight(Time sweep_pos) {
  purge(sweep_pos);
  return heap_.empty() ? 0 : heap_.front().height;
}

Time LazyActivityHeap::maxHeightExcluding(Time sweep_pos, ActivityId excluded) {
  purge(sweep_pos);
  if (heap_.empty()) return 0;
  if (heap_.front().activity != excluded) return heap_.front().height;
  // Pop the excluded top, read the runner-up, restore.
  const Entry top = heap_.front();
  heap_.front() = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) siftDown(0);
  purge(sweep_pos);
  const Time second = heap_.empty() ? 0 : heap_.front().height;
  insert(top.activity, top.height);
  return second;
}

void LazyActivityHeap::siftUp(std::size_t i) {
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!below(heap_[parent], heap_[i])) break;
    std::swap(heap_[i], heap_[parent]);
    i = parent;
  }
}

void LazyActivityHeap::siftDown(std::size_t i) {
  const std::size_t n = heap_.size();
  while (true) {
    std::size_t best = i;
    const std::size_t left = 2 * i + 1;
    const std::size_t right = 2 * i + 2;
    if (left < n && below(heap_[best], heap_[left])) best = left;
    if (right < n && below(heap_[best], heap_[right])) best = right;
    if (best == i) return;
    std::swap(heap_[i], heap_[best]);
    i = best;
  }
}

}  // namespace rcusp
