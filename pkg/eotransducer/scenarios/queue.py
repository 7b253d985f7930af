import logging
import queue
from collections import namedtuple

SweepItem = namedtuple("SweepItem", ["index", "value"])


class SweepQueue:
    """
    sweep points waiting for a worker. get() returns None once the queue
    stays empty for timeout seconds.
    """

    def __init__(self):
        self.q = queue.Queue()

    def put(self, index, value):
        self.q.put(SweepItem(index, value))

    def put_many(self, values):
        for index, value in enumerate(values):
            self.put(index, value)

    def get(self, timeout=0.1):
        try:
            item = self.q.get(timeout=timeout)
        except queue.Empty:
            return

        self.q.task_done()
        if type(item) != SweepItem:
            logging.warning("Got a weird queue entry, skipping")
            return
        return item

    def empty(self):
        return self.q.empty()

    @property
    def q(self):
        return self._q

    @q.setter
    def q(self, q):
        self._q = q
