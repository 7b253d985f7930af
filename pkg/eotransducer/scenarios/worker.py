import logging
import threading


class SweepWorker(threading.Thread):
    """
    pulls sweep points off a pre-filled SweepQueue and stores each row in
    results at the point's index. The thread exits when the queue is drained,
    when shutdown() turns true, or after recording an exception in errors.
    """

    def __init__(self, q, evaluate, results, errors, name, shutdown=lambda: False):
        super().__init__(name=name)
        self.q = q
        self.evaluate = evaluate
        self.results = results
        self.errors = errors
        self.shutdown = shutdown
        self.evaluated = 0

    def run(self):
        while not self.shutdown():
            item = self.q.get()
            if not item:
                if self.q.empty():
                    break
                continue
            try:
                self.results[item.index] = self.evaluate(item.value)
                self.evaluated += 1
            except Exception as e:
                logging.error(f"sweep point {item.index} failed: {e}")
                self.errors[item.index] = e
                return
        logging.debug(f"{self.name} finished after {self.evaluated} points")
