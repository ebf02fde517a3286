static void dispatch(String args, Channel chan) {
    Message msg = Codec.decode(args);
    if (msg == null) {
        chan.close();
        return;
    }
    if (msg.kind() == 2) {
        chan.reply(msg, true);
    } else {
        Queue q = Broker.lookup(msg.topic());
        q.offer(msg);
        chan.ack(args, q.size());
    }
    Metrics.count("dispatch", 1);
}
