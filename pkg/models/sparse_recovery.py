# -*- coding: utf-8 -*-

from collections import Counter


class RecoveryOverflow(Exception):
    def __init__(self, count, capacity):
        super(RecoveryOverflow, self).__init__('%d elements stored, recovery capacity is %d.' % (count, capacity))
        self.count = count
        self.capacity = capacity


class SparseRecovery(object):
    """Capacity-t insert/delete container whose survivors can be listed whenever at most t remain.

    Backed by an exact multiset, so it never loses elements; only recover() enforces
    the capacity.
    """
    def __init__(self, capacity):
        if capacity < 1:
            raise ValueError('Recovery capacity must be positive, got %s.' % capacity)
        self.capacity = int(capacity)
        self.elements = Counter()
        self.count = 0

    def __len__(self):
        return self.count

    def __contains__(self, e):
        return self.elements[e] > 0

    def __repr__(self):
        return 'SparseRecovery(capacity=%d, count=%d)' % (self.capacity, self.count)

    def insert(self, e):
        self.elements[e] += 1
        self.count += 1

    def delete(self, e):
        if self.elements[e] <= 0:
            del self.elements[e]
            raise KeyError(e)
        self.elements[e] -= 1
        if self.elements[e] == 0:
            del self.elements[e]
        self.count -= 1

    def recover(self):
        if self.count > self.capacity:
            raise RecoveryOverflow(self.count, self.capacity)
        return sorted(self.elements.elements())


# ///////////////////////////// = End of SparseRecovery Class Definition = ///////////////////////////// #


def sr_insert(s, e):
    s.insert(e)


def sr_delete(s, e):
    s.delete(e)


def sr_recover(s):
    return s.recover()
